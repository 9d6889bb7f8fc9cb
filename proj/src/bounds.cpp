#include <bicheb/bounds.hpp>

#include <bicheb/chebyshev.hpp>
#include <bicheb/errors.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace bicheb {

Bound Bound::unbounded() { return Bound{std::numeric_limits<double>::infinity()}; }
bool Bound::is_unbounded() const { return std::isinf(value); }

namespace {

struct Factors {
  double K;
  double A;
  double B;
  double C;
  double denom;
  bool singular;
};

Factors factors_of(const ClassParams& p) {
  const double lam = p.lambda();
  const double mu = p.mu();
  const double xd = p.xi() * p.delta();
  const double t = p.t();
  Factors f;
  f.K = lam + mu + 2.0 * xd;
  f.A = f.K * f.K;
  f.B = (2.0 * lam + mu) * (mu + 1.0) + 12.0 * xd;
  f.C = 2.0 * lam + mu + 6.0 * xd;
  f.denom = std::abs(f.A - 2.0 * (2.0 * f.A - f.B) * t * t);
  f.singular = f.denom < kSingularTolerance * std::max(1.0, f.A);
  return f;
}

Bound a2_from_denom(double t, double denom, bool singular) {
  if (singular) return Bound::unbounded();
  return Bound{2.0 * t * std::sqrt(2.0 * t) / std::sqrt(denom)};
}

Bound sloped_from_denom(double eta, double t, double denom, bool singular) {
  const double gap = std::abs(eta - 1.0);
  if (singular) return gap == 0.0 ? Bound{0.0} : Bound::unbounded();
  return Bound{8.0 * gap * t * t * t / denom};
}

// Piecewise Fekete-Szego formula shared by the corollary evaluators: flat
// value below the threshold, sloped value 8|eta-1|t^3/D above it.
Bound piecewise(double eta, double t, double flat, double D, double threshold, double lead) {
  const bool singular = D < kSingularTolerance * std::max(1.0, lead);
  if (std::abs(eta - 1.0) <= (singular ? 0.0 : threshold)) return Bound{flat};
  return sloped_from_denom(eta, t, D, singular);
}

bool is_one(double x) { return x == 1.0; }
bool is_zero(double x) { return x == 0.0; }

}  // namespace

BoundReport coefficient_bounds(const ClassParams& p) {
  const Factors f = factors_of(p);
  const double t = p.t();
  BoundReport r;
  r.A = f.A;
  r.B = f.B;
  r.denom = f.denom;
  r.singular = f.singular;
  r.a2_bound = a2_from_denom(t, f.denom, f.singular);
  r.a3_bound = 4.0 * t * t / f.A + 2.0 * t / f.C;
  return r;
}

Bound bound_a2(const ClassParams& p) { return coefficient_bounds(p).a2_bound; }
double bound_a3(const ClassParams& p) { return coefficient_bounds(p).a3_bound; }

std::string_view to_string(Branch b) { return b == Branch::kFlat ? "FLAT" : "SLOPED"; }
std::string_view to_string(MVariant v) { return v == MVariant::kCorrected ? "corrected" : "as-printed"; }

std::optional<MVariant> parse_variant(std::string_view s) {
  if (s == "corrected" || s == "CORRECTED") return MVariant::kCorrected;
  if (s == "as-printed" || s == "as_printed" || s == "AS_PRINTED") return MVariant::kAsPrinted;
  return std::nullopt;
}

FeketeSzegoReport fekete_szego_bound(const ClassParams& p, double eta, MVariant variant) {
  const Factors f = factors_of(p);
  const double t = p.t();
  const double xd = p.xi() * p.delta();
  const double m_factor = variant == MVariant::kCorrected ? f.C : 2.0 * p.lambda() + p.mu() + 2.0 * xd;

  FeketeSzegoReport r;
  r.eta = eta;
  r.variant = variant;
  r.threshold_M = f.singular ? 0.0 : f.denom / (4.0 * m_factor * t * t);
  r.flat_value = 2.0 * t / f.C;
  r.sloped_value = sloped_from_denom(eta, t, f.denom, f.singular);

  const double u1 = cheb_u(1, t);
  const double u2 = cheb_u(2, t);
  const double h_den = f.B * u1 * u1 - 2.0 * f.A * u2;
  if (eta == 1.0) {
    r.h_eta = 0.0;
  } else if (f.singular) {
    r.h_eta = std::copysign(std::numeric_limits<double>::infinity(), (1.0 - eta) * h_den);
  } else {
    r.h_eta = u1 * u1 * (1.0 - eta) / h_den;
  }

  if (std::abs(eta - 1.0) <= r.threshold_M) {
    r.branch = Branch::kFlat;
    r.bound = Bound{r.flat_value};
  } else {
    r.branch = Branch::kSloped;
    r.bound = r.sloped_value;
  }
  return r;
}

std::string_view to_string(Corollary c) {
  switch (c) {
    case Corollary::k2_2: return "COR_2_2";
    case Corollary::k2_3: return "COR_2_3";
    case Corollary::k2_4: return "COR_2_4";
    case Corollary::k2_5: return "COR_2_5";
    case Corollary::k3_2: return "COR_3_2";
    case Corollary::k3_3: return "COR_3_3";
    case Corollary::k3_4: return "COR_3_4";
    case Corollary::k3_5: return "COR_3_5";
    case Corollary::k3_6: return "COR_3_6";
    case Corollary::k3_7: return "COR_3_7";
    case Corollary::k3_8: return "COR_3_8";
  }
  return "COR_?";
}

std::optional<Corollary> parse_corollary(std::string_view s) {
  std::string digits;
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch))) digits.push_back(ch);
  }
  for (Corollary c : kAllCorollaries) {
    const std::string_view name = to_string(c);  // COR_x_y
    if (digits.size() == 2 && digits[0] == name[4] && digits[1] == name[6]) return c;
  }
  return std::nullopt;
}

bool is_fekete_szego(Corollary c) { return c >= Corollary::k3_2; }

bool fixes_eta(Corollary c) {
  return c == Corollary::k3_2 || c == Corollary::k3_4 || c == Corollary::k3_6;
}

bool on_slice(Corollary c, const ClassParams& p) {
  const bool l1 = is_one(p.lambda());
  const bool m1 = is_one(p.mu());
  const bool d0 = is_zero(p.delta());
  switch (c) {
    case Corollary::k2_2:
    case Corollary::k3_3:
    case Corollary::k3_4:
      return l1 && m1 && d0;
    case Corollary::k2_3:
    case Corollary::k3_5:
    case Corollary::k3_6:
      return m1 && d0;
    case Corollary::k2_4:
    case Corollary::k3_7:
      return d0;
    case Corollary::k2_5:
    case Corollary::k3_8:
      return m1;
    case Corollary::k3_2:
      return true;
  }
  return false;
}

CorollaryValue corollary_bound(Corollary c, const ClassParams& p, std::optional<double> eta) {
  if (!on_slice(c, p)) {
    throw UsageError(std::string(to_string(c)) + ": parameters are off the corollary's slice");
  }
  if (is_fekete_szego(c)) {
    if (fixes_eta(c)) {
      if (eta && *eta != 1.0) throw UsageError(std::string(to_string(c)) + ": eta is fixed to 1");
      eta = 1.0;
    } else if (!eta) {
      throw UsageError(std::string(to_string(c)) + ": eta is required");
    }
  }

  const double lam = p.lambda();
  const double mu = p.mu();
  const double delta = p.delta();
  const double t = p.t();
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double root = 2.0 * t * std::sqrt(2.0 * t);

  auto a2_of = [&](double D, double lead) {
    if (D < kSingularTolerance * std::max(1.0, lead)) return Bound::unbounded();
    return Bound{root / std::sqrt(D)};
  };

  CorollaryValue v;
  switch (c) {
    case Corollary::k2_2:
      v.a2 = Bound{t * std::sqrt(2.0 * t) / std::sqrt(1.0 - t2)};
      v.a3 = Bound{t2 + 2.0 / 3.0 * t};
      break;
    case Corollary::k2_3: {
      const double lead = (lam + 1.0) * (lam + 1.0);
      v.a2 = a2_of(std::abs(lead - 4.0 * lam * lam * t2), lead);
      v.a3 = Bound{4.0 * t2 / lead + 2.0 * t / (2.0 * lam + 1.0)};
      break;
    }
    case Corollary::k2_4: {
      const double lead = (lam + mu) * (lam + mu);
      const double D = std::abs(lead - 2.0 * (2.0 * lead - (2.0 * lam + mu) * (mu + 1.0)) * t2);
      v.a2 = a2_of(D, lead);
      v.a3 = Bound{4.0 * t2 / lead + 2.0 * t / (2.0 * lam + mu)};
      break;
    }
    case Corollary::k2_5: {
      const double lead = (1.0 + lam + 2.0 * delta) * (1.0 + lam + 2.0 * delta);
      const double inner = (lam + 2.0 * delta) * (lam + 2.0 * delta) - 2.0 * delta;
      v.a2 = a2_of(std::abs(lead - 4.0 * inner * t2), lead);
      v.a3 = Bound{4.0 * t2 / lead + 2.0 * t / (1.0 + 2.0 * lam + 6.0 * delta)};
      break;
    }
    case Corollary::k3_2: {
      const double xi = (2.0 * lam + mu) / (2.0 * lam + 1.0);
      v.fs = Bound{2.0 * t / (2.0 * lam + mu + 6.0 * xi * delta)};
      break;
    }
    case Corollary::k3_3: {
      // Printed as 2t/3 for |eta-1| <= (1-t^2)/(3t^2), else 2|eta-1|t^3/(1-t^2).
      const double gap = std::abs(*eta - 1.0);
      v.fs = gap <= (1.0 - t2) / (3.0 * t2) ? Bound{2.0 / 3.0 * t} : Bound{2.0 * gap * t3 / (1.0 - t2)};
      break;
    }
    case Corollary::k3_4:
      v.fs = Bound{2.0 / 3.0 * t};
      break;
    case Corollary::k3_5: {
      const double lead = (1.0 + lam) * (1.0 + lam);
      const double D = std::abs(lead - 4.0 * lam * lam * t2);
      v.fs = piecewise(*eta, t, 2.0 * t / (1.0 + 2.0 * lam), D, D / (4.0 * (1.0 + 2.0 * lam) * t2), lead);
      break;
    }
    case Corollary::k3_6:
      v.fs = Bound{2.0 * t / (1.0 + 2.0 * lam)};
      break;
    case Corollary::k3_7: {
      const double lead = (lam + mu) * (lam + mu);
      const double D = std::abs(lead - 2.0 * (2.0 * lead - (2.0 * lam + mu) * (mu + 1.0)) * t2);
      v.fs = piecewise(*eta, t, 2.0 * t / (2.0 * lam + mu), D, D / (4.0 * (2.0 * lam + mu) * t2), lead);
      break;
    }
    case Corollary::k3_8: {
      const double lead = (1.0 + lam + 2.0 * delta) * (1.0 + lam + 2.0 * delta);
      const double inner = (lam + 2.0 * delta) * (lam + 2.0 * delta) - 2.0 * delta;
      const double D = std::abs(lead - 4.0 * inner * t2);
      const double flat_den = 1.0 + 2.0 * lam + 6.0 * delta;
      v.fs = piecewise(*eta, t, 2.0 * t / flat_den, D, D / (4.0 * flat_den * t2), lead);
      break;
    }
  }
  return v;
}

double bound_deviation(Bound x, Bound y) {
  if (x.is_unbounded() && y.is_unbounded()) return 0.0;
  if (x.is_unbounded() || y.is_unbounded()) return std::numeric_limits<double>::infinity();
  const double scale = std::max({1.0, std::abs(x.value), std::abs(y.value)});
  return std::abs(x.value - y.value) / scale;
}

ReductionResult reduction_check(Corollary c, std::span<const ClassParams> grid, std::span<const double> etas,
                                MVariant variant, double tolerance) {
  if (grid.empty()) throw UsageError("reduction_check: empty grid");
  for (const ClassParams& p : grid) {
    if (!on_slice(c, p)) {
      throw UsageError(std::string(to_string(c)) + ": grid point off the corollary's slice");
    }
  }
  const bool free_eta = is_fekete_szego(c) && !fixes_eta(c);
  if (free_eta && etas.empty()) throw UsageError(std::string(to_string(c)) + ": needs an eta grid");

  ReductionResult r{c};
  auto record = [&](double d) {
    r.max_deviation = std::max(r.max_deviation, d);
    ++r.points;
  };
  for (const ClassParams& p : grid) {
    if (!is_fekete_szego(c)) {
      const BoundReport general = coefficient_bounds(p);
      const CorollaryValue cv = corollary_bound(c, p);
      record(std::max(bound_deviation(general.a2_bound, *cv.a2),
                      bound_deviation(Bound{general.a3_bound}, *cv.a3)));
    } else if (!free_eta) {
      record(bound_deviation(fekete_szego_bound(p, 1.0, variant).bound, *corollary_bound(c, p).fs));
    } else {
      for (double eta : etas) {
        record(bound_deviation(fekete_szego_bound(p, eta, variant).bound, *corollary_bound(c, p, eta).fs));
      }
    }
  }
  r.pass = r.max_deviation <= tolerance;
  return r;
}

}  // namespace bicheb
