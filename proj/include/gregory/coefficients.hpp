#pragma once

// Taylor and logarithmic coefficients of f in S*_G, where z f'(z)/f(z) = Psi(omega(z)).

#include <array>
#include <stdexcept>

#include "gregory/caratheodory.hpp"
#include "gregory/gregory_psi.hpp"
#include "gregory/series.hpp"

namespace gregory {

template <Scalar T>
struct CoefficientVector {
  T a2, a3, a4, a5;
  T gamma1, gamma2, gamma3;

  // Fills the logarithmic coefficients from a2..a4:
  //   g1 = a2/2, g2 = (a3 - a2^2/2)/2, g3 = (a4 - a2 a3 + a2^3/3)/2.
  static CoefficientVector from_taylor(T a2, T a3, T a4, T a5) {
    const T half = rational_constant<T>(1, 2);
    const T third = rational_constant<T>(1, 3);
    T g1 = half * a2;
    T g2 = half * (a3 - half * a2 * a2);
    T g3 = half * (a4 - a2 * a3 + third * a2 * a2 * a2);
    return {std::move(a2), std::move(a3), std::move(a4), std::move(a5), std::move(g1), std::move(g2), std::move(g3)};
  }

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

class OutsideCaratheodory : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Closed formulas
//   a2 = c1/4
//   a3 = (3 c2 - c1^2)/24
//   a4 = (4 c1^3 - 19 c1 c2 + 24 c3)/288
//   a5 = -(71 c1^4 + 330 c2^2 + 600 c1 c3 - 425 c1^2 c2 - 720 c4)/11520
// without the |c_n| <= 2 check.
template <Scalar T>
CoefficientVector<T> coeffs_from_c_unchecked(const T& c1, const T& c2, const T& c3, const T& c4) {
  auto k = [](long v) { return integer_constant<T>(v); };
  const T c1sq = c1 * c1;
  T a2 = c1 / k(4);
  T a3 = (k(3) * c2 - c1sq) / k(24);
  T a4 = (k(4) * c1sq * c1 - k(19) * c1 * c2 + k(24) * c3) / k(288);
  T a5 = -(k(71) * c1sq * c1sq + k(330) * c2 * c2 + k(600) * c1 * c3 - k(425) * c1sq * c2 - k(720) * c4) / k(11520);
  return CoefficientVector<T>::from_taylor(std::move(a2), std::move(a3), std::move(a4), std::move(a5));
}

// Same, rejecting inputs that cannot be coefficients of a member of P.
template <Scalar T>
CoefficientVector<T> coeffs_from_c(const T& c1, const T& c2, const T& c3, const T& c4) {
  for (const T* c : {&c1, &c2, &c3, &c4}) {
    if (scalar_traits<T>::magnitude(*c) > 2.0 + 1e-9) {
      throw OutsideCaratheodory("coeffs_from_c: |c_n| > 2, input is not from the Caratheodory class");
    }
  }
  return coeffs_from_c_unchecked(c1, c2, c3, c4);
}

// f with f(0) = 0, f'(0) = 1 and z f'/f = Psi(omega) through z^order, built as
//   f = z exp( integral_0^z (Psi(omega(t)) - 1)/t dt ).
// omega must vanish at 0 and be known through z^{order-1}.
template <Scalar T>
TruncatedSeries<T> solve_subordination(const TruncatedSeries<T>& omega, std::size_t order) {
  if (!scalar_traits<T>::is_zero(omega[0])) throw SeriesError("solve_subordination: omega(0) must be 0");
  if (order < 1) throw SeriesError("solve_subordination: order must be >= 1");
  if (omega.order() + 1 < order) throw SeriesError("solve_subordination: omega known to too low an order");
  const std::size_t n = order - 1;
  const auto psi_omega = compose(psi_series<T>(n), omega.truncated(n)).truncated(n);
  // (Psi(omega) - 1)/t is known through t^{n-1}; integrating brings it back to n.
  std::vector<T> integrand;
  for (std::size_t k = 1; k <= n; ++k) integrand.push_back(psi_omega[k]);
  const auto log_f_over_z =
      n == 0 ? TruncatedSeries<T>::zero(0) : integrate(TruncatedSeries<T>(std::move(integrand)));
  return exp_series(log_f_over_z).shifted_up(1);
}

struct ExtremalFunction {
  unsigned k;
  RationalSeries series;
};

// z exp( integral_0^z (Psi(t^k) - 1)/t dt ), i.e. the solution for omega = z^k.
// Default order 4k + 2 keeps a5 resolved for every k.
inline ExtremalFunction extremal(unsigned k, std::size_t order = 0) {
  if (k < 1) throw std::invalid_argument("extremal: k must be >= 1");
  if (order == 0) order = 4 * static_cast<std::size_t>(k) + 2;
  order = std::max<std::size_t>(order, 5);
  const auto omega = RationalSeries::monomial(k, ExactRational(1), order - 1);
  return {k, solve_subordination(omega, order)};
}

// gamma_1..gamma_3: half the coefficients of log(f(z)/z).
template <Scalar T>
std::array<T, 3> log_coeffs(const TruncatedSeries<T>& f) {
  if (f.order() < 4) throw SeriesError("log_coeffs: f must be known through z^4");
  if (!scalar_traits<T>::is_zero(f[0]) || !(f[1] == integer_constant<T>(1))) {
    throw SeriesError("log_coeffs: f must satisfy f(0) = 0 and f'(0) = 1");
  }
  const auto l = log_series(f.shifted_down(1));
  const T half = rational_constant<T>(1, 2);
  return {half * l[1], half * l[2], half * l[3]};
}

// a2..a5 read off a normalised series.
template <Scalar T>
CoefficientVector<T> coefficient_vector(const TruncatedSeries<T>& f) {
  if (f.order() < 5) throw SeriesError("coefficient_vector: f must be known through z^5");
  if (!scalar_traits<T>::is_zero(f[0]) || !(f[1] == integer_constant<T>(1))) {
    throw SeriesError("coefficient_vector: f must satisfy f(0) = 0 and f'(0) = 1");
  }
  return CoefficientVector<T>::from_taylor(f[2], f[3], f[4], f[5]);
}

}  // namespace gregory
