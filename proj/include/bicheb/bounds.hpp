#ifndef BICHEB_BOUNDS_HPP
#define BICHEB_BOUNDS_HPP

// Closed-form coefficient and Fekete-Szego bounds for the class, together
// with the printed special-case formulas of its named sub-classes.
//
// Shorthand used throughout:
//   K     = lambda + mu + 2 xi delta        (linear coefficient factor)
//   A     = K^2
//   B     = (2 lambda + mu)(mu + 1) + 12 xi delta
//   C     = 2 lambda + mu + 6 xi delta      (a_3 coefficient factor)
//   denom = |A - 2 (2A - B) t^2|
//
//   |a_2| <= 2t sqrt(2t) / sqrt(denom)
//   |a_3| <= 4t^2 / A + 2t / C
//   |a_3 - eta a_2^2| <= 2t / C                     if |eta - 1| <= M
//                        8 |eta - 1| t^3 / denom     otherwise
//
// The threshold M has two readings. The corrected one, denom / (4 C t^2),
// follows from the branch condition |h(eta)| <= 1/(2C) and makes the bound
// continuous in eta. The as-printed one uses 2 lambda + mu + 2 xi delta in
// place of C; it agrees with the corrected threshold only when delta = 0.

#include <bicheb/classop.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bicheb {

// A nonnegative bound that may be infinite when a denominator vanishes.
struct Bound {
  double value = 0.0;

  static Bound unbounded();
  bool is_unbounded() const;
  friend bool operator==(const Bound&, const Bound&) = default;
};

// denom below this (times max(1, A)) is treated as zero.
inline constexpr double kSingularTolerance = 1e-12;

struct BoundReport {
  Bound a2_bound;
  double a3_bound = 0.0;
  double A = 0.0;
  double B = 0.0;
  double denom = 0.0;
  bool singular = false;
};

BoundReport coefficient_bounds(const ClassParams& p);
Bound bound_a2(const ClassParams& p);
double bound_a3(const ClassParams& p);

enum class Branch { kFlat, kSloped };
enum class MVariant { kCorrected, kAsPrinted };

std::string_view to_string(Branch b);
std::string_view to_string(MVariant v);
std::optional<MVariant> parse_variant(std::string_view s);

struct FeketeSzegoReport {
  double eta = 0.0;
  Bound bound;
  Branch branch = Branch::kFlat;
  double threshold_M = 0.0;
  double h_eta = 0.0;
  MVariant variant = MVariant::kCorrected;
  // Both branch formulas evaluated at eta, whichever one is selected.
  double flat_value = 0.0;
  Bound sloped_value;
};

FeketeSzegoReport fekete_szego_bound(const ClassParams& p, double eta,
                                     MVariant variant = MVariant::kCorrected);

// The named special cases, in the order they are stated. Coefficient-bound
// corollaries come first (k2_*), Fekete-Szego corollaries second (k3_*).
enum class Corollary {
  k2_2,  // lambda = mu = 1, delta = 0
  k2_3,  // mu = 1, delta = 0
  k2_4,  // delta = 0
  k2_5,  // mu = 1
  k3_2,  // eta = 1
  k3_3,  // lambda = mu = 1, delta = 0
  k3_4,  // lambda = mu = 1, delta = 0, eta = 1
  k3_5,  // mu = 1, delta = 0
  k3_6,  // mu = 1, delta = 0, eta = 1
  k3_7,  // delta = 0
  k3_8,  // mu = 1
};

inline constexpr Corollary kAllCorollaries[] = {
    Corollary::k2_2, Corollary::k2_3, Corollary::k2_4, Corollary::k2_5,
    Corollary::k3_2, Corollary::k3_3, Corollary::k3_4, Corollary::k3_5,
    Corollary::k3_6, Corollary::k3_7, Corollary::k3_8,
};

std::string_view to_string(Corollary c);
// Accepts "2.2", "COR_2_2" and "cor-2-2" style names.
std::optional<Corollary> parse_corollary(std::string_view s);

bool is_fekete_szego(Corollary c);
// True when the corollary's statement has eta fixed to 1.
bool fixes_eta(Corollary c);
// Whether p lies on the parameter slice of the corollary.
bool on_slice(Corollary c, const ClassParams& p);

struct CorollaryValue {
  std::optional<Bound> a2;
  std::optional<Bound> a3;
  std::optional<Bound> fs;
};

// Evaluates the corollary's own formula, not the general theorem. Throws
// UsageError when p is off the slice or eta is missing / not 1 as required.
CorollaryValue corollary_bound(Corollary c, const ClassParams& p, std::optional<double> eta = std::nullopt);

// |x - y| / max(1, |x|, |y|); 0 when both are unbounded, inf when only one is.
double bound_deviation(Bound x, Bound y);

struct ReductionResult {
  Corollary id;
  bool pass = false;
  double max_deviation = 0.0;
  std::size_t points = 0;
};

// Compares the general theorems with the corollary on every grid point (and
// every eta for Fekete-Szego corollaries that leave eta free).
ReductionResult reduction_check(Corollary c, std::span<const ClassParams> grid,
                                std::span<const double> etas = {},
                                MVariant variant = MVariant::kCorrected, double tolerance = 1e-12);

}  // namespace bicheb

#endif  // BICHEB_BOUNDS_HPP
