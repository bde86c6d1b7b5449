#pragma once

// Arbitrary-precision rational numbers (thin value wrapper around GMP's mpq_class).
//
// mpq_class uses expression templates, which do not mix well with `auto` in
// generic code. ExactRational evaluates every operation eagerly and always
// holds a canonical fraction: positive denominator, gcd(|p|, q) = 1.

#include <cctype>
#include <cmath>
#include <compare>
#include <concepts>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gregory {

class ExactRational {
 public:
  ExactRational() = default;
  template <std::integral I>
  ExactRational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I> && sizeof(I) <= sizeof(long)) {
      q_ = mpq_class(static_cast<long>(value));
    } else if constexpr (!std::is_signed_v<I> && sizeof(I) <= sizeof(unsigned long)) {
      q_ = mpq_class(static_cast<unsigned long>(value));
    } else {
      q_ = mpq_class(mpz_class(std::to_string(value), 10));
    }
  }
  ExactRational(long num, long den) {
    if (den == 0) throw std::domain_error("ExactRational: zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
  }
  explicit ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Parses "p", "p/q" or a finite decimal literal such as "-0.125" or "1e-3".
  // Decimals are converted exactly (0.1 -> 1/10).
  static ExactRational parse(std::string_view text);

  // Exact value of a finite double (every double is a dyadic rational).
  static ExactRational from_double(double value) {
    if (!std::isfinite(value)) throw std::domain_error("ExactRational: non-finite double");
    return ExactRational(mpq_class(value));
  }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  double to_double() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  // "p/q" in lowest terms with the sign on p; integers print as "p".
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }

  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_{0};
};

inline ExactRational abs(const ExactRational& r) { return r.sign() < 0 ? -r : r; }

inline ExactRational pow(ExactRational base, unsigned exponent) {
  ExactRational out(1);
  while (exponent != 0) {
    if (exponent & 1U) out *= base;
    base *= base;
    exponent >>= 1U;
  }
  return out;
}

inline ExactRational ExactRational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return std::invalid_argument("ExactRational: cannot parse '" + s + "'"); };
  if (s.empty()) throw bad();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw std::domain_error("ExactRational: zero denominator");
    return ExactRational(q);
  }

  // Decimal with optional exponent: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool any_digit = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    any_digit = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      --scale;
      any_digit = true;
    }
  }
  if (!any_digit) throw bad();
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    const std::string exp_text = s.substr(pos);
    if (exp_text.empty()) throw bad();
    std::size_t used = 0;
    long exp_value = 0;
    try {
      exp_value = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != exp_text.size() || exp_value > 4096 || exp_value < -4096) throw bad();
    scale += exp_value;
    pos = s.size();
  }
  if (pos != s.size()) throw bad();

  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(mantissa, ten_pow) : mpq_class(mantissa * ten_pow);
  return ExactRational(q);
}

}  // namespace gregory
