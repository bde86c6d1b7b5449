#pragma once

// Truncated power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
//
// `order()` is N, the highest index whose coefficient is known. Binary
// operations return a series of order min(N_a, N_b); compose() can do better,
// see its comment. Values are immutable once built and safe to share across
// threads.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gregory/scalar.hpp"

namespace gregory {

// Largest truncation order accepted by the library.
inline constexpr std::size_t kMaxSeriesOrder = 64;
// Order used when the caller does not ask for one. a_2..a_5 need 5.
inline constexpr std::size_t kDefaultSeriesOrder = 12;
// Horner evaluation is only meaningful well inside the unit disk.
inline constexpr double kDefaultReliabilityRadius = 0.99;

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <Scalar T>
class TruncatedSeries {
 public:
  using value_type = T;

  // Coefficients c_0..c_N; the order is coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw SeriesError("TruncatedSeries: at least one coefficient required");
    check_order(order());
  }

  // Pads with zeros (or drops the tail) to reach the requested order.
  TruncatedSeries(std::vector<T> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    check_order(order);
    coeffs_.resize(order + 1, T{});
  }

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries({}, order); }
  static TruncatedSeries constant(T c, std::size_t order) { return TruncatedSeries({std::move(c)}, order); }
  static TruncatedSeries one(std::size_t order) { return constant(integer_constant<T>(1), order); }
  // c z^k through the given order.
  static TruncatedSeries monomial(std::size_t k, T c, std::size_t order) {
    std::vector<T> v(order + 1, T{});
    if (k <= order) v[k] = std::move(c);
    return TruncatedSeries(std::move(v));
  }
  static TruncatedSeries identity(std::size_t order) {
    return monomial(1, integer_constant<T>(1), order);
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const T> coeffs() const { return coeffs_; }
  const T& operator[](std::size_t k) const { return coeffs_[k]; }
  const T& at(std::size_t k) const {
    if (k > order()) {
      throw std::out_of_range("TruncatedSeries: coefficient " + std::to_string(k) +
                              " beyond order " + std::to_string(order()));
    }
    return coeffs_[k];
  }

  // Index of the first nonzero coefficient, or order()+1 if all vanish.
  std::size_t valuation() const {
    for (std::size_t k = 0; k <= order(); ++k) {
      if (!scalar_traits<T>::is_zero(coeffs_[k])) return k;
    }
    return order() + 1;
  }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) {
      throw SeriesError("TruncatedSeries: cannot extend order " + std::to_string(this->order()) +
                        " to " + std::to_string(order));
    }
    return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  // Divides by z^k; requires the first k coefficients to vanish.
  TruncatedSeries shifted_down(std::size_t k) const {
    if (k > order()) throw SeriesError("TruncatedSeries: shift beyond order");
    for (std::size_t j = 0; j < k; ++j) {
      if (!scalar_traits<T>::is_zero(coeffs_[j])) {
        throw SeriesError("TruncatedSeries: division by z^k with nonzero low coefficient");
      }
    }
    return TruncatedSeries(std::vector<T>(coeffs_.begin() + k, coeffs_.end()));
  }

  // Multiplies by z^k; the order grows by k.
  TruncatedSeries shifted_up(std::size_t k) const {
    std::vector<T> v(k, T{});
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(v));
  }

  TruncatedSeries operator-() const {
    std::vector<T> v(coeffs_);
    for (auto& c : v) c = -c;
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = a.coeffs_[k] + b.coeffs_[k];
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = a.coeffs_[k] - b.coeffs_[k];
    return TruncatedSeries(std::move(v));
  }

  // Cauchy product.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> v(n + 1, T{});
    for (std::size_t i = 0; i <= n; ++i) {
      if (scalar_traits<T>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(v));
  }

  friend TruncatedSeries operator*(const T& s, const TruncatedSeries& a) {
    std::vector<T> v(a.coeffs_);
    for (auto& c : v) c = s * c;
    return TruncatedSeries(std::move(v));
  }

  // q with q * b = a through min order; b(0) must be nonzero.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (scalar_traits<T>::is_zero(b.coeffs_[0])) {
      throw SeriesError("series division: divisor has zero constant term");
    }
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      T acc = a.coeffs_[k];
      for (std::size_t j = 1; j <= k; ++j) acc -= b.coeffs_[j] * q[k - j];
      q[k] = acc / b.coeffs_[0];
    }
    return TruncatedSeries(std::move(q));
  }

  // Coefficient-wise equality through the common order.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + n + 1, b.coeffs_.begin());
  }

 private:
  static void check_order(std::size_t order) {
    if (order > kMaxSeriesOrder) {
      throw SeriesError("TruncatedSeries: order " + std::to_string(order) + " exceeds maximum " +
                        std::to_string(kMaxSeriesOrder));
    }
  }

  std::vector<T> coeffs_;
};

using RationalSeries = TruncatedSeries<ExactRational>;
using ComplexSeries = TruncatedSeries<Complex>;

template <Scalar T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) { return a + b; }
template <Scalar T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) { return a * b; }
template <Scalar T>
TruncatedSeries<T> div(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) { return a / b; }

// outer(inner(z)) by Horner substitution; inner(0) must be 0.
//
// Order rule: with v = valuation(inner) >= 1, the unknown tail of `outer`
// starts contributing at z^{(N_outer+1) v}, so the result is exact through
// min(N_inner, (N_outer+1) v - 1). For v = 1 this is the plain min rule.
template <Scalar T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
  if (!scalar_traits<T>::is_zero(inner[0])) {
    throw SeriesError("compose: inner series must vanish at 0");
  }
  const std::size_t v = inner.valuation();
  const std::size_t tail_start = (outer.order() + 1) * v;
  const std::size_t n = std::min(inner.order(), tail_start - 1);
  const TruncatedSeries<T> in = inner.truncated(n);

  auto result = TruncatedSeries<T>::constant(outer[outer.order()], n);
  for (std::size_t k = outer.order(); k-- > 0;) {
    result = result * in + TruncatedSeries<T>::constant(outer[k], n);
  }
  return result;
}

// Term-wise derivative; the order drops by one.
template <Scalar T>
TruncatedSeries<T> differentiate(const TruncatedSeries<T>& a) {
  if (a.order() == 0) throw SeriesError("differentiate: order-0 series has no known derivative");
  std::vector<T> v(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) v[k - 1] = integer_constant<T>(static_cast<long>(k)) * a[k];
  return TruncatedSeries<T>(std::move(v));
}

// Antiderivative with zero constant term; the order grows by one.
template <Scalar T>
TruncatedSeries<T> integrate(const TruncatedSeries<T>& a) {
  std::vector<T> v(a.order() + 2, T{});
  for (std::size_t k = 0; k <= a.order(); ++k) v[k + 1] = a[k] / integer_constant<T>(static_cast<long>(k + 1));
  return TruncatedSeries<T>(std::move(v));
}

// log(a) with log(1) := 0; a(0) must equal 1.
// Uses z L' = z a' / a, i.e. n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}.
template <Scalar T>
TruncatedSeries<T> log_series(const TruncatedSeries<T>& a) {
  if (!(a[0] == integer_constant<T>(1))) throw SeriesError("log_series: constant term must be 1");
  const std::size_t n = a.order();
  std::vector<T> l(n + 1, T{});
  for (std::size_t m = 1; m <= n; ++m) {
    const T mm = integer_constant<T>(static_cast<long>(m));
    T acc = mm * a[m];
    for (std::size_t k = 1; k < m; ++k) acc -= integer_constant<T>(static_cast<long>(k)) * l[k] * a[m - k];
    l[m] = acc / mm;
  }
  return TruncatedSeries<T>(std::move(l));
}

// exp(a); a(0) must equal 0. Uses E' = a' E: n E_n = sum_{k=1}^{n} k a_k E_{n-k}.
template <Scalar T>
TruncatedSeries<T> exp_series(const TruncatedSeries<T>& a) {
  if (!scalar_traits<T>::is_zero(a[0])) throw SeriesError("exp_series: constant term must be 0");
  const std::size_t n = a.order();
  std::vector<T> e(n + 1, T{});
  e[0] = integer_constant<T>(1);
  for (std::size_t m = 1; m <= n; ++m) {
    T acc{};
    for (std::size_t k = 1; k <= m; ++k) acc += integer_constant<T>(static_cast<long>(k)) * a[k] * e[m - k];
    e[m] = acc / integer_constant<T>(static_cast<long>(m));
  }
  return TruncatedSeries<T>(std::move(e));
}

// Horner evaluation of the truncated polynomial. The truncation error is not
// estimated; callers pick an order adequate for |z|. |z| must be strictly
// below `radius`.
template <Scalar T>
Complex evaluate(const TruncatedSeries<T>& a, Complex z, double radius = kDefaultReliabilityRadius) {
  if (!(std::abs(z) < radius)) {
    throw SeriesError("evaluate: |z| outside the reliability radius");
  }
  Complex acc = scalar_traits<T>::to_complex(a[a.order()]);
  for (std::size_t k = a.order(); k-- > 0;) acc = acc * z + scalar_traits<T>::to_complex(a[k]);
  return acc;
}

// Float copy of an exact series.
inline ComplexSeries to_complex(const RationalSeries& a) {
  std::vector<Complex> v;
  v.reserve(a.order() + 1);
  for (const auto& c : a.coeffs()) v.push_back(scalar_traits<ExactRational>::to_complex(c));
  return ComplexSeries(std::move(v));
}

}  // namespace gregory
