#ifndef BICHEB_CHEBYSHEV_HPP
#define BICHEB_CHEBYSHEV_HPP

// Chebyshev polynomials of the second kind U_n(t).
//
// Two routes are provided on purpose: cheb_u runs the three-term recurrence,
// gen_fun_coeffs expands 1/(1 - 2tz + z^2) by truncated series division.
// Each is used to check the other.

#include <bicheb/errors.hpp>
#include <bicheb/powerseries.hpp>

#include <string>

namespace bicheb {

namespace detail {

template <typename Real>
void require_unit_interval(Real t, const char* op) {
  if (!(t >= Real(-1) && t <= Real(1))) {
    throw DomainError(std::string(op) + ": t must lie in [-1, 1]");
  }
}

}  // namespace detail

// U_0 = 1, U_1 = 2t, U_{n+1} = 2t U_n - U_{n-1}.
template <typename Real>
Real cheb_u(Index n, Real t) {
  if (n < 0) throw UsageError("cheb_u: degree must be nonnegative");
  detail::require_unit_interval(t, "cheb_u");
  Real prev(1);
  if (n == 0) return prev;
  Real cur = Real(2) * t;
  for (Index k = 1; k < n; ++k) {
    const Real next = Real(2) * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// U_0(t) .. U_{n_max}(t) from the recurrence.
template <typename Real>
Vector<Real> cheb_u_table(Index n_max, Real t) {
  if (n_max < 0) throw UsageError("cheb_u_table: degree must be nonnegative");
  detail::require_unit_interval(t, "cheb_u_table");
  Vector<Real> u(n_max + 1);
  u[0] = Real(1);
  if (n_max >= 1) u[1] = Real(2) * t;
  for (Index k = 2; k <= n_max; ++k) u[k] = Real(2) * t * u[k - 1] - u[k - 2];
  return u;
}

// Coefficients of 1/(1 - 2tz + z^2) through z^{n_max}.
template <typename Real>
Vector<Real> gen_fun_coeffs(Real t, Index n_max) {
  if (n_max < 0) throw UsageError("gen_fun_coeffs: degree must be nonnegative");
  detail::require_unit_interval(t, "gen_fun_coeffs");
  auto denom = TruncatedSeries<Real>(n_max).coeffs();
  denom[0] = Real(1);
  if (n_max >= 1) denom[1] = Real(-2) * t;
  if (n_max >= 2) denom[2] = Real(1);
  return reciprocal(TruncatedSeries<Real>(std::move(denom))).coeffs();
}

// H(z, t) = 1/(1 - 2tz + z^2) as a truncated series with scalar type S.
template <typename S, typename Real>
TruncatedSeries<S> generating_series(Real t, Index order) {
  const Vector<Real> c = gen_fun_coeffs(t, order);
  return TruncatedSeries<S>(Vector<S>(c.template cast<S>()));
}

}  // namespace bicheb

#endif  // BICHEB_CHEBYSHEV_HPP
