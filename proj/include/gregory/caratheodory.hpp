#pragma once

// The Caratheodory class P: analytic p with p(0) = 1 and Re p > 0 in the disk.
//
// Two ways to produce members:
//   * the Libera-Zlotkiewicz coordinates (tau1, tau2, tau3) for c_1..c_3;
//   * convex combinations of boundary kernels (1 + e^{i t} z)/(1 - e^{i t} z),
//     which also give c_4 and beyond.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gregory/series.hpp"

namespace gregory {

// Slack allowed on |tau| <= 1 in float mode (points sampled on the unit circle
// can land at 1 + 1e-16).
inline constexpr double kUnitDiskSlack = 1e-12;

template <Scalar T>
class CaratheodoryParams {
 public:
  CaratheodoryParams(T tau1, T tau2, T tau3) : tau1_(std::move(tau1)), tau2_(std::move(tau2)), tau3_(std::move(tau3)) {
    validate();
  }

  const T& tau1() const { return tau1_; }
  const T& tau2() const { return tau2_; }
  const T& tau3() const { return tau3_; }

 private:
  void validate() const {
    if constexpr (scalar_traits<T>::exact) {
      const ExactRational one(1);
      if (tau1_ < ExactRational(0) || tau1_ > one) throw std::invalid_argument("tau1 must lie in [0, 1]");
      if (abs(tau2_) > one) throw std::invalid_argument("|tau2| must be <= 1");
      if (abs(tau3_) > one) throw std::invalid_argument("|tau3| must be <= 1");
    } else {
      if (tau1_.imag() != 0.0 || !(tau1_.real() >= 0.0 && tau1_.real() <= 1.0)) {
        throw std::invalid_argument("tau1 must be real in [0, 1]");
      }
      if (!(std::abs(tau2_) <= 1.0 + kUnitDiskSlack)) throw std::invalid_argument("|tau2| must be <= 1");
      if (!(std::abs(tau3_) <= 1.0 + kUnitDiskSlack)) throw std::invalid_argument("|tau3| must be <= 1");
    }
  }

  T tau1_;
  T tau2_;
  T tau3_;
};

// c_1, c_2, c_3 in terms of (tau1, tau2, tau3).
template <Scalar T>
std::array<T, 3> c_from_tau(const CaratheodoryParams<T>& p) {
  const T& t1 = p.tau1();
  const T& t2 = p.tau2();
  const T& t3 = p.tau3();
  const T one = integer_constant<T>(1);
  const T two = integer_constant<T>(2);
  const T four = integer_constant<T>(4);
  const T s1 = one - t1 * t1;                           // 1 - tau1^2
  const T s2 = one - scalar_traits<T>::norm(t2);        // 1 - |tau2|^2
  const T c1 = two * t1;
  const T c2 = two * t1 * t1 + two * s1 * t2;
  const T c3 = two * t1 * t1 * t1 + four * s1 * t1 * t2 - two * s1 * t1 * t2 * t2 + two * s1 * s2 * t3;
  return {c1, c2, c3};
}

namespace detail {

template <Scalar T>
bool on_unit_circle(const T& t) {
  if constexpr (scalar_traits<T>::exact) {
    return abs(t) == ExactRational(1);
  } else {
    return std::abs(std::abs(t) - 1.0) <= kUnitDiskSlack;
  }
}

// Numerator and denominator coefficients (degree <= 3) of the rational
// function representing the parameters, chosen by which tau sits on the circle.
template <Scalar T>
std::pair<std::vector<T>, std::vector<T>> p_rational_form(const CaratheodoryParams<T>& p) {
  using tr = scalar_traits<T>;
  const T one = integer_constant<T>(1);
  const T& t1 = p.tau1();
  const T& t2 = p.tau2();
  const T& t3 = p.tau3();
  if (on_unit_circle(t1)) {
    return {{one, t1}, {one, -t1}};
  }
  const T ct1 = tr::conj(t1);
  if (on_unit_circle(t2)) {
    return {{one, ct1 * t2 + t1, t2}, {one, ct1 * t2 - t1, -t2}};
  }
  // Degree-3 form; a genuine member of P for every |tau3| <= 1.
  const T ct2 = tr::conj(t2);
  return {{one, ct2 * t3 + ct1 * t2 + t1, ct1 * t3 + t1 * ct2 * t3 + t2, t3},
          {one, ct2 * t3 + ct1 * t2 - t1, ct1 * t3 - t1 * ct2 * t3 - t2, -t3}};
}

inline Complex eval_poly(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

}  // namespace detail

// Series of the explicit member of P realising the parameters.
template <Scalar T>
TruncatedSeries<T> p_from_tau(const CaratheodoryParams<T>& params, std::size_t order) {
  auto [num, den] = detail::p_rational_form(params);
  return TruncatedSeries<T>(std::move(num), order) / TruncatedSeries<T>(std::move(den), order);
}

// Closed-form p(z) for the same rational function (no truncation).
template <Scalar T>
Complex p_closed(const CaratheodoryParams<T>& params, Complex z) {
  auto [num, den] = detail::p_rational_form(params);
  std::vector<Complex> n, d;
  for (const auto& c : num) n.push_back(scalar_traits<T>::to_complex(c));
  for (const auto& c : den) d.push_back(scalar_traits<T>::to_complex(c));
  return detail::eval_poly(n, z) / detail::eval_poly(d, z);
}

// p(z) = sum w_i (1 + e^{i t_i} z) / (1 - e^{i t_i} z).
class KernelMix {
 public:
  static constexpr double kWeightTolerance = 1e-12;

  KernelMix(std::vector<double> weights, std::vector<double> angles)
      : weights_(std::move(weights)), angles_(std::move(angles)) {
    if (weights_.empty() || weights_.size() != angles_.size()) {
      throw std::invalid_argument("KernelMix: weights and angles must be non-empty and equally long");
    }
    double total = 0.0;
    for (double w : weights_) {
      if (!(w >= 0.0)) throw std::invalid_argument("KernelMix: weights must be nonnegative");
      total += w;
    }
    if (std::abs(total - 1.0) > kWeightTolerance) throw std::invalid_argument("KernelMix: weights must sum to 1");
    for (double& a : angles_) {
      if (!std::isfinite(a)) throw std::invalid_argument("KernelMix: angles must be finite");
      a = std::fmod(a, 2.0 * std::numbers::pi);
      if (a < 0.0) a += 2.0 * std::numbers::pi;
    }
  }

  // m atoms of weight 1/m at offset + 2 pi j / m: p(z) = (1 + e^{i m offset} z^m)/(1 - ...).
  static KernelMix symmetric(std::size_t m, double offset = 0.0) {
    if (m == 0) throw std::invalid_argument("KernelMix: symmetric mix needs m >= 1");
    std::vector<double> w(m, 1.0 / static_cast<double>(m)), a(m);
    for (std::size_t j = 0; j < m; ++j) a[j] = offset + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    return KernelMix(std::move(w), std::move(a));
  }

  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& angles() const { return angles_; }

  // c_n = 2 sum w_i e^{i n t_i}, n >= 1.
  Complex coefficient(std::size_t n) const {
    if (n == 0) return {1.0, 0.0};
    Complex acc{};
    for (std::size_t i = 0; i < size(); ++i) acc += weights_[i] * std::polar(1.0, static_cast<double>(n) * angles_[i]);
    return 2.0 * acc;
  }

  Complex operator()(Complex z) const {
    Complex acc{};
    for (std::size_t i = 0; i < size(); ++i) {
      const Complex u = std::polar(1.0, angles_[i]) * z;
      acc += weights_[i] * (1.0 + u) / (1.0 - u);
    }
    return acc;
  }

 private:
  std::vector<double> weights_;
  std::vector<double> angles_;
};

inline ComplexSeries sample_p(const KernelMix& mix, std::size_t order) {
  std::vector<Complex> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) v[n] = mix.coefficient(n);
  return ComplexSeries(std::move(v));
}

// Random m-atom mix: angles stratified over [0, 2 pi) (one atom per stratum,
// jittered) and Dirichlet(1) weights.
template <class Rng>
KernelMix random_mix(Rng& rng, std::size_t m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> w(m), a(m);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log1p(-unit(rng));
    total += x;
  }
  for (auto& x : w) x /= total;
  // Renormalise the sum to exactly 1 in floating point as far as possible.
  w.back() = std::max(0.0, 1.0 - std::accumulate(w.begin(), w.end() - 1, 0.0));
  std::vector<std::size_t> strata(m);
  std::iota(strata.begin(), strata.end(), std::size_t{0});
  std::shuffle(strata.begin(), strata.end(), rng);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = 2.0 * std::numbers::pi * (static_cast<double>(strata[i]) + unit(rng)) / static_cast<double>(m);
  }
  return KernelMix(std::move(w), std::move(a));
}

// Exact-mode kernel mix with real coefficients: atoms come in conjugate pairs
// at +/- t_i, so c_n = 2 sum w_i T_n(cos t_i) with T_n the Chebyshev polynomial.
// Rational weights and cosines give rational coefficients.
class RationalKernelMix {
 public:
  RationalKernelMix(std::vector<ExactRational> weights, std::vector<ExactRational> cosines)
      : weights_(std::move(weights)), cosines_(std::move(cosines)) {
    if (weights_.empty() || weights_.size() != cosines_.size()) {
      throw std::invalid_argument("RationalKernelMix: weights and cosines must be non-empty and equally long");
    }
    ExactRational total;
    for (const auto& w : weights_) {
      if (w.sign() < 0) throw std::invalid_argument("RationalKernelMix: weights must be nonnegative");
      total += w;
    }
    if (total != ExactRational(1)) throw std::invalid_argument("RationalKernelMix: weights must sum to 1");
    for (const auto& x : cosines_) {
      if (abs(x) > ExactRational(1)) throw std::invalid_argument("RationalKernelMix: cosines must lie in [-1, 1]");
    }
  }

  const std::vector<ExactRational>& weights() const { return weights_; }
  const std::vector<ExactRational>& cosines() const { return cosines_; }

  ExactRational coefficient(std::size_t n) const {
    if (n == 0) return 1;
    ExactRational acc;
    for (std::size_t i = 0; i < weights_.size(); ++i) acc += weights_[i] * chebyshev(n, cosines_[i]);
    return ExactRational(2) * acc;
  }

  // Float twin for closed-form evaluation.
  KernelMix to_float() const {
    std::vector<double> w, a;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      const double t = std::acos(std::clamp(cosines_[i].to_double(), -1.0, 1.0));
      w.push_back(weights_[i].to_double() / 2.0);
      w.push_back(weights_[i].to_double() / 2.0);
      a.push_back(t);
      a.push_back(-t);
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;
    return KernelMix(std::move(w), std::move(a));
  }

 private:
  static ExactRational chebyshev(std::size_t n, const ExactRational& x) {
    ExactRational prev(1), cur = x;
    if (n == 0) return prev;
    for (std::size_t k = 1; k < n; ++k) {
      ExactRational next = ExactRational(2) * x * cur - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }

  std::vector<ExactRational> weights_;
  std::vector<ExactRational> cosines_;
};

inline RationalSeries sample_p(const RationalKernelMix& mix, std::size_t order) {
  std::vector<ExactRational> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) v[n] = mix.coefficient(n);
  return RationalSeries(std::move(v));
}

// Random exact mix: m atom pairs with weights k_i / sum k and cosines on a
// grid of spacing 1/denominator.
template <class Rng>
RationalKernelMix random_rational_mix(Rng& rng, std::size_t m, long denominator = 64) {
  std::uniform_int_distribution<long> weight(1, denominator);
  std::uniform_int_distribution<long> cosine(-denominator, denominator);
  std::vector<long> raw(m);
  long total = 0;
  for (auto& k : raw) total += (k = weight(rng));
  std::vector<ExactRational> w, x;
  for (long k : raw) {
    w.emplace_back(k, total);
    x.emplace_back(cosine(rng), denominator);
  }
  return RationalKernelMix(std::move(w), std::move(x));
}

// omega = (p - 1)/(p + 1); p(0) must be 1.
template <Scalar T>
TruncatedSeries<T> schwarz_from_p(const TruncatedSeries<T>& p) {
  const T one = integer_constant<T>(1);
  if (!(p[0] == one)) throw SeriesError("schwarz_from_p: p(0) must be 1");
  const auto unit = TruncatedSeries<T>::one(p.order());
  return (p - unit) / (p + unit);
}

// p = (1 + omega)/(1 - omega); omega(0) must be 0.
template <Scalar T>
TruncatedSeries<T> p_from_schwarz(const TruncatedSeries<T>& omega) {
  if (!scalar_traits<T>::is_zero(omega[0])) throw SeriesError("p_from_schwarz: omega(0) must be 0");
  const auto unit = TruncatedSeries<T>::one(omega.order());
  return (unit + omega) / (unit - omega);
}

// Polar grid used for Re p > 0 and |omega| < 1 checks: radii
// max_radius * k / radii for k = 1..radii, angles 2 pi j / angles.
struct DiskGrid {
  std::size_t radii = 64;
  std::size_t angles = 256;
  double max_radius = 0.99;

  template <class F>
  void for_each(F&& f) const {
    f(Complex{});
    for (std::size_t k = 1; k <= radii; ++k) {
      const double r = max_radius * static_cast<double>(k) / static_cast<double>(radii);
      for (std::size_t j = 0; j < angles; ++j) {
        f(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles)));
      }
    }
  }
};

}  // namespace gregory
