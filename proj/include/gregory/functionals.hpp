#pragma once

// Coefficient functionals and their closed-form sharp bounds on S*_G.
//
// Each functional has an a-form (on a CoefficientVector) and a c-form (on
// Caratheodory coefficients). The two are independent algebraic routes; the
// tests check they agree exactly in rational mode.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gregory/caratheodory.hpp"
#include "gregory/coefficients.hpp"

namespace gregory {

class InconsistentPaths : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

template <Scalar T>
void ensure_same(const T& lhs, const T& rhs, const char* what) {
  bool same = false;
  if constexpr (scalar_traits<T>::exact) {
    same = lhs == rhs;
  } else {
    same = std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs) + std::abs(rhs));
  }
  if (!same) throw InconsistentPaths(std::string(what) + ": computation paths disagree");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// H_{2,1}(F_f/2) = gamma1 gamma3 - gamma2^2

template <Scalar T>
T hankel_log_from_a(const CoefficientVector<T>& v) {
  auto k = [](long x) { return integer_constant<T>(x); };
  const T a2sq = v.a2 * v.a2;
  return (a2sq * a2sq - k(12) * v.a3 * v.a3 + k(12) * v.a2 * v.a4) / k(48);
}

template <Scalar T>
T hankel_log(const CoefficientVector<T>& v) {
  T h = v.gamma1 * v.gamma3 - v.gamma2 * v.gamma2;
  detail::ensure_same(h, hankel_log_from_a(v), "hankel_log");
  return h;
}

// (19 c1^4 - 56 c1^2 c2 - 144 c2^2 + 192 c1 c3) / 36864
template <Scalar T>
T hankel_log_from_c(const T& c1, const T& c2, const T& c3) {
  auto k = [](long x) { return integer_constant<T>(x); };
  const T c1sq = c1 * c1;
  return (k(19) * c1sq * c1sq - k(56) * c1sq * c2 - k(144) * c2 * c2 + k(192) * c1 * c3) / k(36864);
}

// (3 t1^4 - 4 t1^2 t2 (1 - t1^2) - 12 t2^2 (1 - t1^2)(3 + t1^2)
//   + 48 t1 t3 (1 - t1^2)(1 - |t2|^2)) / 2304
template <Scalar T>
T hankel_log_from_params(const CaratheodoryParams<T>& p) {
  auto k = [](long x) { return integer_constant<T>(x); };
  const T& t1 = p.tau1();
  const T& t2 = p.tau2();
  const T& t3 = p.tau3();
  const T t1sq = t1 * t1;
  const T s1 = k(1) - t1sq;
  const T s2 = k(1) - scalar_traits<T>::norm(t2);
  return (k(3) * t1sq * t1sq - k(4) * t1sq * t2 * s1 - k(12) * t2 * t2 * s1 * (k(3) + t1sq) +
          k(48) * t1 * t3 * s1 * s2) /
         k(2304);
}

// Hot-loop version of hankel_log_from_params for campaigns: tau1 real,
// tau2 = r e^{i phi}, tau3 = e^{i psi}, without validation.
inline Complex hankel_log_from_polar(double t1, Complex t2, Complex t3) {
  const double t1sq = t1 * t1;
  const double s1 = 1.0 - t1sq;
  const double s2 = 1.0 - std::norm(t2);
  return (3.0 * t1sq * t1sq - 4.0 * t1sq * s1 * t2 - 12.0 * s1 * (3.0 + t1sq) * t2 * t2 + 48.0 * t1 * s1 * s2 * t3) /
         2304.0;
}

// ---------------------------------------------------------------------------
// Fekete-Szego: a3 - mu a2^2

template <Scalar T>
T fekete_szego(const CoefficientVector<T>& v, const T& mu) {
  return v.a3 - mu * v.a2 * v.a2;
}

// |c2 - v c1^2| <= 2 - 4v (v < 0), 2 (0 <= v <= 1), 4v - 2 (v > 1).
inline ExactRational ma_minda_bound_exact(const ExactRational& v) {
  if (v < ExactRational(0)) return ExactRational(2) - ExactRational(4) * v;
  if (v > ExactRational(1)) return ExactRational(4) * v - ExactRational(2);
  return 2;
}

inline double ma_minda_bound(double v) {
  if (v < 0.0) return -4.0 * v + 2.0;
  if (v > 1.0) return 4.0 * v - 2.0;
  return 2.0;
}

// Sharp bound of |a3 - mu a2^2|: (1/12)|1 - 3 mu| outside [-2/3, 4/3], 1/4 inside.
// The upper branch is written as (1/12)(3 mu - 1), which is positive there.
inline ExactRational fekete_bound_exact(const ExactRational& mu) {
  const ExactRational lower(-2, 3), upper(4, 3);
  if (mu < lower) return (ExactRational(1) - ExactRational(3) * mu) / ExactRational(12);
  if (mu > upper) return (ExactRational(3) * mu - ExactRational(1)) / ExactRational(12);
  return {1, 4};
}

inline double fekete_bound(double mu) {
  if (mu < -2.0 / 3.0) return (1.0 - 3.0 * mu) / 12.0;
  if (mu > 4.0 / 3.0) return (3.0 * mu - 1.0) / 12.0;
  return 0.25;
}

// |a3 - mu a2^2| = (1/8)|c2 - v c1^2| with this v.
inline ExactRational fekete_to_ma_minda_v(const ExactRational& mu) {
  return (ExactRational(2) + ExactRational(3) * mu) / ExactRational(6);
}

// ---------------------------------------------------------------------------
// Zalcman: a3^2 - a5, and its c-form
//   (1/16)(lambda c1^4 + a c2^2 + 2 b c1 c3 - (3/2) beta c1^2 c2 - c4)

struct ZalcmanConstants {
  ExactRational lambda{91, 720};
  ExactRational a{17, 24};
  ExactRational b{5, 12};
  ExactRational beta{109, 216};
};
inline const ZalcmanConstants kZalcman{};

template <Scalar T>
T zalcman(const CoefficientVector<T>& v) {
  return v.a3 * v.a3 - v.a5;
}

template <Scalar T>
T zalcman_from_c(const T& c1, const T& c2, const T& c3, const T& c4) {
  using tr = scalar_traits<T>;
  const T lambda = tr::from_rational(kZalcman.lambda);
  const T a = tr::from_rational(kZalcman.a);
  const T b = tr::from_rational(kZalcman.b);
  const T beta = tr::from_rational(kZalcman.beta);
  const T c1sq = c1 * c1;
  const T inner = lambda * c1sq * c1sq + a * c2 * c2 + integer_constant<T>(2) * b * c1 * c3 -
                  rational_constant<T>(3, 2) * beta * c1sq * c2 - c4;
  return inner / integer_constant<T>(16);
}

// Left side minus right side of the sufficient condition for
// |lambda c1^4 + a c2^2 + 2b c1 c3 - (3/2) beta c1^2 c2 - c4| <= 2:
//   8a(1-a){(b beta - 2 lambda)^2 + (b(a+b) - beta)^2} + b(1-b)(beta - 2ab)^2
//   - 4ab^2(1-a)(1-b)^2   (must be <= 0, with 0 < a, b < 1).
inline ExactRational zalcman_condition_gap(const ZalcmanConstants& k = kZalcman) {
  const ExactRational one(1), two(2), four(4), eight(8);
  const ExactRational t1 = k.b * k.beta - two * k.lambda;
  const ExactRational t2 = k.b * (k.a + k.b) - k.beta;
  const ExactRational t3 = k.beta - two * k.a * k.b;
  return eight * k.a * (one - k.a) * (t1 * t1 + t2 * t2) + k.b * (one - k.b) * t3 * t3 -
         four * k.a * k.b * k.b * (one - k.a) * (one - k.b) * (one - k.b);
}

// ---------------------------------------------------------------------------
// Generalized Zalcman: a2 a3 - a4, and its c-form
//   -(1/12)(c3 - 2 B c1 c2 + D c1^3)

struct GenZalcmanConstants {
  ExactRational B{7, 12};
  ExactRational D{7, 24};
};
inline const GenZalcmanConstants kGenZalcman{};

template <Scalar T>
T gen_zalcman(const CoefficientVector<T>& v) {
  return v.a2 * v.a3 - v.a4;
}

template <Scalar T>
T gen_zalcman_from_c(const T& c1, const T& c2, const T& c3) {
  using tr = scalar_traits<T>;
  const T B = tr::from_rational(kGenZalcman.B);
  const T D = tr::from_rational(kGenZalcman.D);
  const T inner = c3 - integer_constant<T>(2) * B * c1 * c2 + D * c1 * c1 * c1;
  return -inner / integer_constant<T>(12);
}

// (B(2B - 1), D, B): the condition B(2B-1) <= D <= B for |c3 - 2B c1 c2 + D c1^3| <= 2.
inline std::array<ExactRational, 3> gen_zalcman_condition_chain(const GenZalcmanConstants& k = kGenZalcman) {
  return {k.B * (ExactRational(2) * k.B - ExactRational(1)), k.D, k.B};
}

// ---------------------------------------------------------------------------
// Sharp bounds.

inline const ExactRational kHankelLogBound{1, 64};
inline const ExactRational kZalcmanBound{1, 8};
inline const ExactRational kGenZalcmanBound{1, 6};

// Default attainment tolerance in float mode.
inline constexpr double kFloatAttainTolerance = 1e-9;

struct FunctionalReport {
  std::string name;
  Complex value;
  double magnitude = 0.0;
  ExactRational bound;
  bool attained = false;
};

// In exact mode `attained` means |value| == bound; in float mode
// | |value| - bound | <= tolerance.
template <Scalar T>
FunctionalReport make_report(std::string name, const T& value, const ExactRational& bound,
                             double tolerance = kFloatAttainTolerance) {
  FunctionalReport r{std::move(name), scalar_traits<T>::to_complex(value), scalar_traits<T>::magnitude(value), bound,
                     false};
  if constexpr (scalar_traits<T>::exact) {
    r.attained = abs(value) == bound;
  } else {
    r.attained = std::abs(r.magnitude - bound.to_double()) <= tolerance;
  }
  return r;
}

}  // namespace gregory
