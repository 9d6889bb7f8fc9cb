#include <bicheb/classop.hpp>

#include <bicheb/chebyshev.hpp>
#include <bicheb/errors.hpp>

#include <cmath>
#include <string>

namespace bicheb {

double xi_of(double lambda, double mu) { return (2.0 * lambda + mu) / (2.0 * lambda + 1.0); }

ClassParams::ClassParams(double lambda, double mu, double delta, double t)
    : lambda_(lambda), mu_(mu), delta_(delta), t_(t) {
  if (!(lambda >= 1.0)) throw UsageError("lambda must be ≥ 1 (got " + std::to_string(lambda) + ")");
  if (!(mu >= 0.0)) throw UsageError("mu must be ≥ 0 (got " + std::to_string(mu) + ")");
  if (!(delta >= 0.0)) throw UsageError("delta must be ≥ 0 (got " + std::to_string(delta) + ")");
  if (!(t > 0.5 && t < 1.0)) throw UsageError("t must lie in (1/2, 1) (got " + std::to_string(t) + ")");
  if (!std::isfinite(lambda) || !std::isfinite(mu) || !std::isfinite(delta)) {
    throw UsageError("class parameters must be finite");
  }
}

bool is_admissible(Complex c1, Complex c2, Complex d1, Complex d2, double slack) {
  const double cap = 1.0 + slack;
  return std::abs(c1) <= cap && std::abs(c2) <= cap && std::abs(d1) <= cap && std::abs(d2) <= cap;
}

Series apply_operator(const Normalized& f, const ClassParams& p) {
  if (f.order() < 3) throw UsageError("apply_operator: f needs order >= 3");
  const Series& fs = f.series();
  const Series quotient = divide_by_z(fs);  // f/z, order N-1
  const Series fprime = differentiate(fs);
  const Series z_fsecond = multiply_by_z(differentiate(fprime));

  const Complex lam(p.lambda());
  const Complex xi_delta(p.xi() * p.delta());
  return Complex(1.0 - p.lambda()) * pow_real(quotient, p.mu()) +
         lam * mul(fprime, pow_real(quotient, p.mu() - 1.0)) + xi_delta * z_fsecond;
}

SchwarzHead extract_schwarz(const Series& op_series, double t) {
  if (op_series.order() < 2) throw UsageError("extract_schwarz: operator series needs order >= 2");
  if (std::abs(op_series[0] - Complex(1.0)) > 1e-9) {
    throw DomainError("extract_schwarz: malformed operator series (constant term is not 1)");
  }
  const double u1 = cheb_u(1, t);
  const double u2 = cheb_u(2, t);
  const Complex c1 = op_series[1] / u1;
  const Complex c2 = (op_series[2] - u2 * c1 * c1) / u1;
  return {c1, c2};
}

SchwarzPair membership_feasibility(Complex a2, Complex a3, const ClassParams& p) {
  const double lam = p.lambda();
  const double mu = p.mu();
  const double delta = p.delta();
  const double u1 = cheb_u(1, p.t());
  const double u2 = cheb_u(2, p.t());

  const double linear = lam + mu + 2.0 * p.xi() * delta;
  const double outer = 2.0 * lam + mu;
  const double a3_weight = 1.0 + 6.0 * delta / (2.0 * lam + 1.0);

  SchwarzPair s;
  s.c1 = linear * a2 / u1;
  s.d1 = -linear * a2 / u1;
  const Complex f_side = outer * (0.5 * (mu - 1.0) * a2 * a2 + a3_weight * a3);
  const Complex g_side =
      outer * ((0.5 * (mu + 3.0) + 12.0 * delta / (2.0 * lam + 1.0)) * a2 * a2 - a3_weight * a3);
  s.c2 = (f_side - u2 * s.c1 * s.c1) / u1;
  s.d2 = (g_side - u2 * s.d1 * s.d1) / u1;
  s.admissible = is_admissible(s.c1, s.c2, s.d1, s.d2);
  return s;
}

}  // namespace bicheb
