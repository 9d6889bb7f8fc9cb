#ifndef BICHEB_POWERSERIES_HPP
#define BICHEB_POWERSERIES_HPP

// Truncated Taylor series about 0, stored as Eigen coefficient vectors.
//
// A series of order N carries c_0..c_N. Every operation here is closed under
// truncation: nothing reads or produces coefficients above the shared order,
// and binary operations on series of different orders throw rather than
// silently truncating to the shorter one.

#include <bicheb/errors.hpp>

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace bicheb {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline constexpr Index kDefaultOrder = 8;

template <typename Scalar>
class TruncatedSeries {
 public:
  using Coeffs = Vector<Scalar>;

  explicit TruncatedSeries(Index order) : coeffs_(Coeffs::Zero(checked_size(order))) {}

  explicit TruncatedSeries(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) throw UsageError("series needs at least one coefficient");
  }

  TruncatedSeries(std::initializer_list<Scalar> coeffs)
      : TruncatedSeries(Coeffs(Eigen::Map<const Coeffs>(coeffs.begin(), Index(coeffs.size())))) {}

  static TruncatedSeries constant(Scalar value, Index order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
  }

  // The series z.
  static TruncatedSeries identity(Index order) {
    if (order < 1) throw UsageError("identity series needs order >= 1");
    TruncatedSeries s(order);
    s.coeffs_[1] = Scalar(1);
    return s;
  }

  Index order() const { return coeffs_.size() - 1; }
  const Coeffs& coeffs() const { return coeffs_; }
  Scalar operator[](Index k) const { return coeffs_[k]; }

  // Coefficient k, or 0 when k exceeds the order.
  Scalar coeff_or_zero(Index k) const { return k <= order() ? coeffs_[k] : Scalar(0); }

  // Re-truncate or zero-extend to a new order.
  TruncatedSeries with_order(Index order) const {
    TruncatedSeries s(order);
    const Index n = std::min(order, this->order()) + 1;
    s.coeffs_.head(n) = coeffs_.head(n);
    return s;
  }

 private:
  static Index checked_size(Index order) {
    if (order < 0) throw UsageError("series order must be nonnegative");
    return order + 1;
  }

  Coeffs coeffs_;
};

namespace detail {

template <typename Scalar>
void require_same_order(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b,
                        const char* op) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

}  // namespace detail

template <typename Scalar>
TruncatedSeries<Scalar> operator+(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  detail::require_same_order(a, b, "add");
  return TruncatedSeries<Scalar>(typename TruncatedSeries<Scalar>::Coeffs(a.coeffs() + b.coeffs()));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator-(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  detail::require_same_order(a, b, "subtract");
  return TruncatedSeries<Scalar>(typename TruncatedSeries<Scalar>::Coeffs(a.coeffs() - b.coeffs()));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator*(Scalar k, const TruncatedSeries<Scalar>& a) {
  return TruncatedSeries<Scalar>(typename TruncatedSeries<Scalar>::Coeffs(k * a.coeffs()));
}

// Cauchy product truncated at the shared order.
template <typename Scalar>
TruncatedSeries<Scalar> mul(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  detail::require_same_order(a, b, "mul");
  const Index n = a.order();
  typename TruncatedSeries<Scalar>::Coeffs out = TruncatedSeries<Scalar>::Coeffs::Zero(n + 1);
  for (Index k = 0; k <= n; ++k) {
    // c_k = sum_i a_i b_{k-i}; the reversed head of b turns it into a dot product.
    out[k] = (a.coeffs().head(k + 1).transpose() * b.coeffs().head(k + 1).reverse())(0, 0);
  }
  return TruncatedSeries<Scalar>(std::move(out));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator*(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  return mul(a, b);
}

template <typename Scalar>
TruncatedSeries<Scalar> differentiate(const TruncatedSeries<Scalar>& a) {
  if (a.order() < 1) throw UsageError("differentiate: series of order 0 has no derivative to retain");
  const Index n = a.order() - 1;
  typename TruncatedSeries<Scalar>::Coeffs out(n + 1);
  for (Index k = 0; k <= n; ++k) out[k] = Scalar(double(k + 1)) * a[k + 1];
  return TruncatedSeries<Scalar>(std::move(out));
}

// z * a; the order grows by one.
template <typename Scalar>
TruncatedSeries<Scalar> multiply_by_z(const TruncatedSeries<Scalar>& a) {
  typename TruncatedSeries<Scalar>::Coeffs out(a.order() + 2);
  out[0] = Scalar(0);
  out.tail(a.order() + 1) = a.coeffs();
  return TruncatedSeries<Scalar>(std::move(out));
}

// a / z for a with zero constant term; the order shrinks by one.
template <typename Scalar>
TruncatedSeries<Scalar> divide_by_z(const TruncatedSeries<Scalar>& a) {
  if (a.order() < 1) throw UsageError("divide_by_z: order must be >= 1");
  if (a[0] != Scalar(0)) throw DomainError("divide_by_z: constant term must vanish");
  return TruncatedSeries<Scalar>(typename TruncatedSeries<Scalar>::Coeffs(a.coeffs().tail(a.order())));
}

// 1 / a by forward substitution; requires a nonzero constant term.
template <typename Scalar>
TruncatedSeries<Scalar> reciprocal(const TruncatedSeries<Scalar>& a) {
  using std::abs;
  if (abs(a[0]) == 0) throw DomainError("reciprocal: constant term must be nonzero");
  const Index n = a.order();
  typename TruncatedSeries<Scalar>::Coeffs q(n + 1);
  q[0] = Scalar(1) / a[0];
  for (Index k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (Index j = 1; j <= k; ++j) acc += a[j] * q[k - j];
    q[k] = -acc / a[0];
  }
  return TruncatedSeries<Scalar>(std::move(q));
}

// a^p for a series with unit constant term and any real p, via the J.C.P.
// Miller recurrence
//   b_n = (1/n) sum_{k=1..n} ((p+1)k - n) a_k b_{n-k},  b_0 = 1.
template <typename Scalar>
TruncatedSeries<Scalar> pow_real(const TruncatedSeries<Scalar>& a, double p) {
  using std::abs;
  if (abs(a[0] - Scalar(1)) > 1e-12) throw DomainError("pow_real: constant term must be 1");
  const Index n = a.order();
  typename TruncatedSeries<Scalar>::Coeffs b(n + 1);
  b[0] = Scalar(1);
  for (Index m = 1; m <= n; ++m) {
    Scalar acc(0);
    for (Index k = 1; k <= m; ++k) acc += Scalar((p + 1.0) * double(k) - double(m)) * a[k] * b[m - k];
    b[m] = acc / Scalar(double(m));
  }
  return TruncatedSeries<Scalar>(std::move(b));
}

// outer(inner(z)) by Horner's scheme. inner must vanish at 0 so that the
// truncation of the composite is exact.
template <typename Scalar>
TruncatedSeries<Scalar> compose(const TruncatedSeries<Scalar>& outer, const TruncatedSeries<Scalar>& inner) {
  detail::require_same_order(outer, inner, "compose");
  if (inner[0] != Scalar(0)) throw DomainError("compose: inner series must have zero constant term");
  const Index n = outer.order();
  auto acc = TruncatedSeries<Scalar>::constant(outer[n], n);
  for (Index k = n - 1; k >= 0; --k) {
    auto next = mul(acc, inner).coeffs();
    next[0] += outer[k];
    acc = TruncatedSeries<Scalar>(std::move(next));
  }
  return acc;
}

// f(z) = z + a_2 z^2 + ... + a_N z^N.
template <typename Scalar>
class NormalizedSeries {
 public:
  explicit NormalizedSeries(TruncatedSeries<Scalar> inner) : inner_(std::move(inner)) {
    if (inner_.order() < 1) throw UsageError("normalized series needs order >= 1");
    if (inner_[0] != Scalar(0) || inner_[1] != Scalar(1)) {
      throw DomainError("normalized series needs f(0) = 0 and f'(0) = 1");
    }
  }

  // Builds z + a_2 z^2 + ... from {a_2, a_3, ...}, zero-padded up to `order`.
  static NormalizedSeries from_tail(const std::vector<Scalar>& tail, Index order) {
    if (order < Index(tail.size()) + 1) throw UsageError("order too small for the given coefficients");
    TruncatedSeries<Scalar> s = TruncatedSeries<Scalar>::identity(order);
    auto c = s.coeffs();
    for (std::size_t k = 0; k < tail.size(); ++k) c[Index(k) + 2] = tail[k];
    return NormalizedSeries(TruncatedSeries<Scalar>(std::move(c)));
  }

  const TruncatedSeries<Scalar>& series() const { return inner_; }
  Index order() const { return inner_.order(); }
  Scalar operator[](Index k) const { return inner_[k]; }

 private:
  TruncatedSeries<Scalar> inner_;
};

// Compositional inverse g with g(f(z)) = z through order N. Writing
// g = sum_j b_j z^j with b_1 = 1, the degree-k coefficient of g(f) is
// b_k + sum_{j<k} b_j [f^j]_k, which must vanish for k >= 2.
template <typename Scalar>
NormalizedSeries<Scalar> invert_compositional(const NormalizedSeries<Scalar>& f) {
  const Index n = f.order();
  if (n < 2) throw UsageError("invert_compositional: order must be >= 2");
  std::vector<TruncatedSeries<Scalar>> powers;  // powers[j-1] = f^j
  powers.reserve(std::size_t(n));
  powers.push_back(f.series());
  for (Index j = 2; j < n; ++j) powers.push_back(mul(powers.back(), f.series()));

  typename TruncatedSeries<Scalar>::Coeffs b = TruncatedSeries<Scalar>::Coeffs::Zero(n + 1);
  b[1] = Scalar(1);
  for (Index k = 2; k <= n; ++k) {
    Scalar acc(0);
    for (Index j = 1; j < k; ++j) acc += b[j] * powers[std::size_t(j - 1)][k];
    b[k] = -acc;
  }
  return NormalizedSeries<Scalar>(TruncatedSeries<Scalar>(std::move(b)));
}

using Complex = std::complex<double>;
using Series = TruncatedSeries<Complex>;
using Normalized = NormalizedSeries<Complex>;

}  // namespace bicheb

#endif  // BICHEB_POWERSERIES_HPP
