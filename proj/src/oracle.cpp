#include <bicheb/oracle.hpp>

#include <bicheb/chebyshev.hpp>
#include <bicheb/errors.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace bicheb {

std::string_view to_string(OracleMode m) { return m == OracleMode::kProofSet ? "proof-set" : "full-system"; }

std::optional<OracleMode> parse_mode(std::string_view s) {
  if (s == "proof-set" || s == "proof_set" || s == "PROOF_SET" || s == "proof") return OracleMode::kProofSet;
  if (s == "full-system" || s == "full_system" || s == "FULL_SYSTEM" || s == "full") return OracleMode::kFullSystem;
  return std::nullopt;
}

std::string to_string(const Quantity& q) {
  switch (q.kind) {
    case QuantityKind::kA2: return "A2";
    case QuantityKind::kA3: return "A3";
    case QuantityKind::kFeketeSzego: {
      std::ostringstream os;
      os.precision(12);
      os << "FS(eta=" << q.eta << ")";
      return os.str();
    }
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kWithinBound: return "WITHIN_BOUND";
    case Verdict::kViolation: return "VIOLATION";
    case Verdict::kSkipped: return "SKIPPED";
  }
  return "?";
}

namespace {

// Coefficient factors in the form the coefficient equations produce them.
struct System {
  double u1;
  double u2;
  double K;   // multiplies a_2 in the degree-1 relation
  double C;   // (2 lambda + mu)(1 + 6 delta/(2 lambda + 1)), multiplies a_3
  double P;   // prefactor of a_2^2 once c_1^2 + d_1^2 is eliminated
  bool singular;
};

System system_of(const ClassParams& p) {
  const double lam = p.lambda();
  const double mu = p.mu();
  const double delta = p.delta();
  System s;
  s.u1 = cheb_u(1, p.t());
  s.u2 = cheb_u(2, p.t());
  s.K = lam + mu + 2.0 * p.xi() * delta;
  const double outer = 2.0 * lam + mu;
  s.C = outer * (1.0 + 6.0 * delta / (2.0 * lam + 1.0));
  const double sum_weight = outer * (1.0 + mu + 12.0 * delta / (2.0 * lam + 1.0));
  s.P = sum_weight - 2.0 * s.u2 * s.K * s.K / (s.u1 * s.u1);
  s.singular = std::abs(s.P) < 1e-12 * std::max(1.0, sum_weight);
  return s;
}

MemberSolution solve(const System& s, Complex c2, Complex d2, int sign, OracleMode mode) {
  MemberSolution m;
  const Complex sum = c2 + d2;
  const Complex a3_tail = s.u1 * (c2 - d2) / (2.0 * s.C);
  if (s.singular) {
    m.status = std::abs(sum) <= 1e-12 ? SolveStatus::kFreeA2 : SolveStatus::kSingular;
    m.a3 = a3_tail;
    return m;
  }
  const Complex a2_sq = s.u1 * sum / s.P;
  m.a2 = double(sign) * std::sqrt(a2_sq);
  m.c1 = s.K * m.a2 / s.u1;
  m.a3 = a2_sq + a3_tail;
  if (mode == OracleMode::kFullSystem && std::abs(m.c1) > 1.0 + kAdmissibleSlack) {
    m.status = SolveStatus::kInfeasible;
  }
  return m;
}

class DiskSampler {
 public:
  explicit DiskSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform on [0, 1) from the top 53 bits; avoids distribution objects whose
  // output differs between standard library implementations.
  double uniform() { return double(rng_() >> 11) * 0x1.0p-53; }

  Complex disk() {
    const double r = std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, theta);
  }

 private:
  std::mt19937_64 rng_;
};

Complex project_to_disk(Complex z) {
  const double r = std::abs(z);
  return r > 1.0 ? z / r : z;
}

struct Candidate {
  Complex c1;
  Complex c2;
  Complex d2;
  int sign;
};

class Search {
 public:
  Search(const Quantity& q, const ClassParams& p, const OracleConfig& cfg)
      : q_(q), cfg_(cfg), sys_(system_of(p)) {}

  void evaluate(const Candidate& cand) {
    ++evaluated_;
    Complex a2;
    Complex a3;
    Complex c1;
    if (q_.kind == QuantityKind::kA3 && cfg_.mode == OracleMode::kProofSet) {
      c1 = double(cand.sign) * cand.c1;
      a2 = sys_.u1 * c1 / sys_.K;
      a3 = a2 * a2 + sys_.u1 * (cand.c2 - cand.d2) / (2.0 * sys_.C);
    } else {
      const MemberSolution m = solve(sys_, cand.c2, cand.d2, cand.sign, cfg_.mode);
      switch (m.status) {
        case SolveStatus::kInfeasible:
        case SolveStatus::kSingular:
          ++infeasible_;
          return;
        case SolveStatus::kFreeA2:
          c1 = double(cand.sign) * cand.c1;
          a2 = sys_.u1 * c1 / sys_.K;
          a3 = a2 * a2 + m.a3;
          break;
        case SolveStatus::kFeasible:
          c1 = m.c1;
          a2 = m.a2;
          a3 = m.a3;
          break;
      }
    }
    double value = 0.0;
    switch (q_.kind) {
      case QuantityKind::kA2: value = std::abs(a2); break;
      case QuantityKind::kA3: value = std::abs(a3); break;
      case QuantityKind::kFeketeSzego: value = std::abs(a3 - q_.eta * a2 * a2); break;
    }
    if (!has_best_ || value > best_value_) {
      has_best_ = true;
      best_value_ = value;
      best_ = cand;
      witness_.pair = SchwarzPair{c1, cand.c2, -c1, cand.d2, is_admissible(c1, cand.c2, -c1, cand.d2)};
      witness_.a2 = a2;
      witness_.a3 = a3;
    }
  }

  bool has_best() const { return has_best_; }
  const Candidate& best() const { return best_; }
  double best_value() const { return best_value_; }
  const Witness& witness() const { return witness_; }
  std::uint64_t evaluated() const { return evaluated_; }
  std::uint64_t infeasible() const { return infeasible_; }

 private:
  Quantity q_;
  OracleConfig cfg_;
  System sys_;
  bool has_best_ = false;
  double best_value_ = 0.0;
  Candidate best_{};
  Witness witness_{};
  std::uint64_t evaluated_ = 0;
  std::uint64_t infeasible_ = 0;
};

constexpr std::array<Complex, 5> kExtremes = {Complex(0, 0), Complex(1, 0), Complex(-1, 0), Complex(0, 1),
                                              Complex(0, -1)};
constexpr int kRefineSteps = 100;
constexpr double kRefineRadius = 0.05;

}  // namespace

MemberSolution solve_member_coeffs(Complex c2, Complex d2, int sign, const ClassParams& p, OracleMode mode) {
  if (sign != 1 && sign != -1) throw UsageError("solve_member_coeffs: sign must be +1 or -1");
  return solve(system_of(p), c2, d2, sign, mode);
}

Bound closed_form_bound(const Quantity& q, const ClassParams& p, MVariant variant) {
  switch (q.kind) {
    case QuantityKind::kA2: return bound_a2(p);
    case QuantityKind::kA3: return Bound{bound_a3(p)};
    case QuantityKind::kFeketeSzego: return fekete_szego_bound(p, q.eta, variant).bound;
  }
  return Bound::unbounded();
}

OracleResult empirical_sup(const Quantity& q, const ClassParams& p, const OracleConfig& cfg) {
  if (cfg.n_samples == 0) throw UsageError("oracle needs at least one sample");
  Search search(q, p, cfg);

  for (Complex c1 : kExtremes) {
    for (Complex c2 : kExtremes) {
      for (Complex d2 : kExtremes) {
        for (int sign : {1, -1}) search.evaluate({c1, c2, d2, sign});
      }
    }
  }

  DiskSampler sampler(cfg.seed);
  for (std::uint64_t i = 0; i < cfg.n_samples; ++i) {
    const Complex c1 = sampler.disk();
    const Complex c2 = sampler.disk();
    const Complex d2 = sampler.disk();
    search.evaluate({c1, c2, d2, 1});
    search.evaluate({c1, c2, d2, -1});
  }

  if (cfg.grid_refine && search.has_best()) {
    auto jitter = [&](Complex z, double radius) {
      const double re = (2.0 * sampler.uniform() - 1.0) * radius;
      const double im = (2.0 * sampler.uniform() - 1.0) * radius;
      return project_to_disk(z + Complex(re, im));
    };
    for (int k = 0; k < kRefineSteps; ++k) {
      const double radius = kRefineRadius * (1.0 - double(k) / kRefineSteps);
      const Candidate centre = search.best();
      search.evaluate({jitter(centre.c1, radius), jitter(centre.c2, radius), jitter(centre.d2, radius),
                       centre.sign});
    }
  }

  OracleResult r{.quantity = q, .params = p};
  r.mode = cfg.mode;
  r.sup_value = search.best_value();
  r.witness = search.witness();
  r.n_samples = cfg.n_samples;
  r.seed = cfg.seed;
  r.n_evaluated = search.evaluated();
  r.n_infeasible = search.infeasible();
  r.closed_form_bound = closed_form_bound(q, p, cfg.variant);
  if (r.closed_form_bound.is_unbounded()) {
    r.verdict = Verdict::kSkipped;
  } else {
    r.verdict = r.sup_value <= r.closed_form_bound.value + kSoundnessTolerance ? Verdict::kWithinBound
                                                                               : Verdict::kViolation;
  }
  return r;
}

SweepReport sweep_verify(std::span<const ClassParams> grid, std::span<const double> etas,
                         const OracleConfig& cfg) {
  if (grid.empty()) throw UsageError("sweep_verify: empty parameter grid");
  std::vector<Quantity> quantities = {Quantity::a2(), Quantity::a3()};
  for (double eta : etas) quantities.push_back(Quantity::fs(eta));

  SweepReport report;
  report.results.reserve(grid.size() * quantities.size());
  for (const ClassParams& p : grid) {
    for (const Quantity& q : quantities) {
      OracleResult r = empirical_sup(q, p, cfg);
      if (r.verdict == Verdict::kViolation) ++report.violations;
      if (r.verdict == Verdict::kSkipped) ++report.skipped;
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

}  // namespace bicheb
