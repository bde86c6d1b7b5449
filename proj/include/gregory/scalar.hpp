#pragma once

// The two coefficient fields used throughout the library.
//
//   ExactRational         exact mode: identities and attainment checks
//   std::complex<double>  float mode: optimization campaigns
//
// Generic code is written once against scalar_traits<T>; a series or vector
// never mixes the two modes.

#include <complex>
#include <concepts>
#include <string_view>

#include "gregory/rational.hpp"

namespace gregory {

using Complex = std::complex<double>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<ExactRational> {
  static constexpr std::string_view mode = "rational";
  static constexpr bool exact = true;
  static ExactRational from_rational(const ExactRational& r) { return r; }
  static ExactRational conj(const ExactRational& r) { return r; }
  static double magnitude(const ExactRational& r) { return abs(r).to_double(); }
  static Complex to_complex(const ExactRational& r) { return {r.to_double(), 0.0}; }
  static bool is_zero(const ExactRational& r) { return r.is_zero(); }
  // |x|^2 stays exact for real rationals.
  static ExactRational norm(const ExactRational& r) { return r * r; }
};

template <>
struct scalar_traits<Complex> {
  static constexpr std::string_view mode = "complex";
  static constexpr bool exact = false;
  static Complex from_rational(const ExactRational& r) { return {r.to_double(), 0.0}; }
  static Complex conj(const Complex& c) { return std::conj(c); }
  static double magnitude(const Complex& c) { return std::abs(c); }
  static Complex to_complex(const Complex& c) { return c; }
  static bool is_zero(const Complex& c) { return c == Complex{}; }
  static Complex norm(const Complex& c) { return {std::norm(c), 0.0}; }
};

template <class T>
concept Scalar = requires { scalar_traits<T>::mode; };

template <Scalar T>
T rational_constant(long num, long den = 1) {
  return scalar_traits<T>::from_rational(ExactRational(num, den));
}

template <Scalar T>
T integer_constant(long value) {
  return rational_constant<T>(value, 1);
}

}  // namespace gregory
