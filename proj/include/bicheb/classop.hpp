#ifndef BICHEB_CLASSOP_HPP
#define BICHEB_CLASSOP_HPP

// The defining operator of the Chebyshev-subordinated bi-univalent class
//
//   (1 - lambda) (f/z)^mu + lambda f' (f/z)^(mu-1) + xi delta z f'',
//   xi = (2 lambda + mu) / (2 lambda + 1),
//
// and the order-3 coefficient relations it induces against
// 1 + U_1(t) w(z) + U_2(t) w(z)^2 + ... for a Schwarz function w.

#include <bicheb/powerseries.hpp>

namespace bicheb {

double xi_of(double lambda, double mu);

class ClassParams {
 public:
  // Throws UsageError naming the violated constraint.
  ClassParams(double lambda, double mu, double delta, double t);

  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double delta() const { return delta_; }
  double t() const { return t_; }
  double xi() const { return xi_of(lambda_, mu_); }

  friend bool operator==(const ClassParams&, const ClassParams&) = default;

 private:
  double lambda_;
  double mu_;
  double delta_;
  double t_;
};

// c_j on the f side, d_j on the g = f^{-1} side.
struct SchwarzPair {
  Complex c1;
  Complex c2;
  Complex d1;
  Complex d2;
  bool admissible = false;
};

// Slack on |c_j|, |d_j| <= 1 so boundary points survive rounding.
inline constexpr double kAdmissibleSlack = 1e-12;

bool is_admissible(Complex c1, Complex c2, Complex d1, Complex d2, double slack = kAdmissibleSlack);

// Operator series of order f.order() - 1. Requires f.order() >= 3.
Series apply_operator(const Normalized& f, const ClassParams& p);

struct SchwarzHead {
  Complex c1;
  Complex c2;
};

// Inverts 1 + U_1 c_1 z + (U_1 c_2 + U_2 c_1^2) z^2 for (c_1, c_2).
// Throws DomainError when the constant term is not 1 (within 1e-9).
SchwarzHead extract_schwarz(const Series& op_series, double t);

// Solves the four order-3 coefficient equations (f side and g side) for
// (c1, c2, d1, d2). Admissibility is necessary for membership, not
// sufficient.
SchwarzPair membership_feasibility(Complex a2, Complex a3, const ClassParams& p);

}  // namespace bicheb

#endif  // BICHEB_CLASSOP_HPP
