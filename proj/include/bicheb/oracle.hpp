#ifndef BICHEB_ORACLE_HPP
#define BICHEB_ORACLE_HPP

// Brute-force search over the Schwarz-coefficient sets that the coefficient
// estimates are derived from. Sampled (c_1, c_2, d_2) in the closed unit
// disk are pushed through the order-3 coefficient relations to (a_2, a_3),
// and the largest modulus of the requested functional is compared against
// the closed-form bound.
//
// Two constraint sets are supported:
//   PROOF_SET   - only what each estimate's derivation uses. For |a_2| and
//                 |a_3 - eta a_2^2| that is a_2^2 = U_1 (c_2 + d_2) / P with
//                 |c_2|, |d_2| <= 1, where P = B - 2 U_2 K^2 / U_1^2. For
//                 |a_3| it is a_2 = U_1 c_1 / K with |c_1| <= 1 together with
//                 a_3 = a_2^2 + U_1 (c_2 - d_2) / (2C).
//   FULL_SYSTEM - a_2 from P as above, and c_1 = K a_2 / U_1 must also lie in
//                 the disk, so all four coefficient equations hold at once.
//
// The relations are rebuilt here from the coefficient equations rather than
// taken from the bounds module, so the two stay independent.

#include <bicheb/bounds.hpp>
#include <bicheb/classop.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bicheb {

enum class OracleMode { kProofSet, kFullSystem };

std::string_view to_string(OracleMode m);
std::optional<OracleMode> parse_mode(std::string_view s);

struct OracleConfig {
  OracleMode mode = OracleMode::kProofSet;
  std::uint64_t n_samples = 10000;
  std::uint64_t seed = 42;
  bool grid_refine = false;
  // Threshold reading used for the closed-form Fekete-Szego bound.
  MVariant variant = MVariant::kCorrected;
};

enum class QuantityKind { kA2, kA3, kFeketeSzego };

struct Quantity {
  QuantityKind kind = QuantityKind::kA2;
  double eta = 0.0;

  static Quantity a2() { return {QuantityKind::kA2, 0.0}; }
  static Quantity a3() { return {QuantityKind::kA3, 0.0}; }
  static Quantity fs(double eta) { return {QuantityKind::kFeketeSzego, eta}; }
};

std::string to_string(const Quantity& q);

enum class Verdict { kWithinBound, kViolation, kSkipped };

std::string_view to_string(Verdict v);

inline constexpr double kSoundnessTolerance = 1e-9;

struct Witness {
  SchwarzPair pair;
  Complex a2;
  Complex a3;
};

struct OracleResult {
  Quantity quantity;
  ClassParams params;
  OracleMode mode = OracleMode::kProofSet;
  double sup_value = 0.0;
  Witness witness;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t n_evaluated = 0;
  std::uint64_t n_infeasible = 0;
  Bound closed_form_bound;
  Verdict verdict = Verdict::kSkipped;
};

enum class SolveStatus {
  kFeasible,
  kInfeasible,  // FULL_SYSTEM: |c_1| > 1
  kSingular,    // P = 0 and c_2 + d_2 != 0: no a_2 solves the system
  kFreeA2,      // P = 0 and c_2 + d_2 = 0: a_2 left free by the equations
};

struct MemberSolution {
  SolveStatus status = SolveStatus::kFeasible;
  Complex a2;
  Complex a3;
  Complex c1;
};

// a_2 = sign * sqrt(U_1 (c_2 + d_2) / P) (principal root), c_1 = K a_2 / U_1,
// a_3 = a_2^2 + U_1 (c_2 - d_2) / (2C). For kFreeA2 only the a_2-independent
// part of a_3 is filled in and a_2 = c_1 = 0.
MemberSolution solve_member_coeffs(Complex c2, Complex d2, int sign, const ClassParams& p,
                                   OracleMode mode = OracleMode::kProofSet);

Bound closed_form_bound(const Quantity& q, const ClassParams& p, MVariant variant);

// Deterministic in (q, p, cfg). Samples are uniform in (|z|^2, arg z) on the
// unit disk, with the 125 triples over {0, +-1, +-i} injected first.
OracleResult empirical_sup(const Quantity& q, const ClassParams& p, const OracleConfig& cfg);

struct SweepReport {
  std::vector<OracleResult> results;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  bool all_within() const { return violations == 0; }
};

// Runs A2, A3 and FS(eta) for each eta at every grid point, in grid order.
SweepReport sweep_verify(std::span<const ClassParams> grid, std::span<const double> etas,
                         const OracleConfig& cfg);

}  // namespace bicheb

#endif  // BICHEB_ORACLE_HPP
