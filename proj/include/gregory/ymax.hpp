#pragma once

// Y(A, B, C) = max_{|z| <= 1} |A + B z + C z^2| + 1 - |z|^2 for real A, B, C:
// its closed piecewise form, a brute-force grid
// oracle, and the functions of tau1 that bound |H_{2,1}| on S*_G.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gregory/rational.hpp"
#include "gregory/scalar.hpp"

namespace gregory {

enum class YCase {
  kSameSignLargeB,   // AC >= 0, |B| >= 2(1 - |C|)
  kSameSignSmallB,   // AC >= 0, |B| <  2(1 - |C|)
  kOppositeFirst,    // AC < 0, -4AC(C^-2 - 1) <= B^2 and |B| < 2(1 - |C|)
  kOppositeSecond,   // AC < 0, B^2 < min{4(1 + |C|)^2, -4AC(C^-2 - 1)}
  kRFirst,           // R: |C|(|B| + 4|A|) <= |AB|
  kRSecond,          // R: |AB| <= |C|(|B| - 4|A|)
  kRThird,           // R: otherwise
};

inline std::string_view to_string(YCase c) {
  switch (c) {
    case YCase::kSameSignLargeB: return "ac_nonneg_large_b";
    case YCase::kSameSignSmallB: return "ac_nonneg_small_b";
    case YCase::kOppositeFirst: return "ac_neg_first";
    case YCase::kOppositeSecond: return "ac_neg_second";
    case YCase::kRFirst: return "r_first";
    case YCase::kRSecond: return "r_second";
    case YCase::kRThird: return "r_third";
  }
  return "unknown";
}

// Branch selection; predicates are tested in the order listed below
// and the first match wins.
inline YCase classify_case(double A, double B, double C) {
  const double a = std::abs(A), b = std::abs(B), c = std::abs(C);
  if (A * C >= 0.0) {
    return b >= 2.0 * (1.0 - c) ? YCase::kSameSignLargeB : YCase::kSameSignSmallB;
  }
  // AC < 0 implies C != 0.
  const double threshold = -4.0 * A * C * (1.0 / (C * C) - 1.0);
  const double b2 = B * B;
  if (threshold <= b2 && b < 2.0 * (1.0 - c)) return YCase::kOppositeFirst;
  if (b2 < std::min(4.0 * (1.0 + c) * (1.0 + c), threshold)) return YCase::kOppositeSecond;
  if (c * (b + 4.0 * a) <= a * b) return YCase::kRFirst;
  if (a * b <= c * (b - 4.0 * a)) return YCase::kRSecond;
  return YCase::kRThird;
}

struct YValue {
  double value;
  YCase branch;
};

inline YValue y_closed(double A, double B, double C) {
  const double a = std::abs(A), b = std::abs(B), c = std::abs(C);
  const YCase branch = classify_case(A, B, C);
  switch (branch) {
    case YCase::kSameSignLargeB: return {a + b + c, branch};
    case YCase::kSameSignSmallB: return {1.0 + a + B * B / (4.0 * (1.0 - c)), branch};
    case YCase::kOppositeFirst: return {1.0 - a + B * B / (4.0 * (1.0 - c)), branch};
    case YCase::kOppositeSecond: return {1.0 + a + B * B / (4.0 * (1.0 + c)), branch};
    case YCase::kRFirst: return {a + b - c, branch};
    case YCase::kRSecond: return {-a + b + c, branch};
    case YCase::kRThird: return {(c + a) * std::sqrt(1.0 - B * B / (4.0 * A * C)), branch};
  }
  throw std::logic_error("y_closed: unreachable");
}

struct OracleGrid {
  std::size_t radii = 512;
  std::size_t angles = 512;
  unsigned refinement_levels = 3;
  // Distinct coarse candidates refined independently.
  std::size_t candidates = 8;
};

// Brute-force maximiser over a polar grid of the closed disk followed by
// local zoom refinement. Always a lower bound on the true maximum.
// For real coefficients |q(conj z)| = |q(z)|, so angles cover [0, pi].
class YOracle {
 public:
  explicit YOracle(OracleGrid grid = {}) : grid_(grid) {
    if (grid_.radii < 2 || grid_.angles < 2) throw std::invalid_argument("YOracle: grid needs >= 2 points per axis");
    dr_ = 1.0 / static_cast<double>(grid_.radii - 1);
    dt_ = std::numbers::pi / static_cast<double>(grid_.angles - 1);
    points_.reserve(grid_.radii * grid_.angles);
    for (std::size_t i = 0; i < grid_.radii; ++i) {
      const double r = static_cast<double>(i) * dr_;
      for (std::size_t j = 0; j < grid_.angles; ++j) {
        const Complex z = std::polar(r, static_cast<double>(j) * dt_);
        points_.push_back({z, z * z, 1.0 - r * r});
      }
    }
  }

  const OracleGrid& grid() const { return grid_; }

  double operator()(double A, double B, double C) const {
    // Best coarse point per block of the grid.
    constexpr std::size_t kBlock = 32;
    const std::size_t rb = (grid_.radii + kBlock - 1) / kBlock;
    const std::size_t tb = (grid_.angles + kBlock - 1) / kBlock;
    std::vector<Candidate> best(rb * tb, Candidate{-1.0, 0, 0});
    for (std::size_t i = 0; i < grid_.radii; ++i) {
      const Point* row = &points_[i * grid_.angles];
      Candidate* block_row = &best[(i / kBlock) * tb];
      for (std::size_t j = 0; j < grid_.angles; ++j) {
        const Point& p = row[j];
        const double re = A + B * p.z.real() + C * p.z2.real();
        const double im = B * p.z.imag() + C * p.z2.imag();
        const double v = std::sqrt(re * re + im * im) + p.one_minus_r2;
        Candidate& cand = block_row[j / kBlock];
        if (v > cand.value) cand = {v, i, j};
      }
    }
    const std::size_t keep = std::min(grid_.candidates, best.size());
    std::partial_sort(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(keep), best.end(),
                      [](const Candidate& x, const Candidate& y) { return x.value > y.value; });
    double out = best.front().value;
    for (std::size_t k = 0; k < keep; ++k) {
      out = std::max(out, refine(A, B, C, static_cast<double>(best[k].i) * dr_, static_cast<double>(best[k].j) * dt_,
                                 best[k].value));
    }
    return out;
  }

 private:
  struct Point {
    Complex z, z2;
    double one_minus_r2;
  };
  struct Candidate {
    double value;
    std::size_t i, j;
  };

  static double eval(double A, double B, double C, double r, double t) {
    const Complex z = std::polar(r, t);
    const Complex q = A + B * z + C * z * z;
    return std::abs(q) + 1.0 - r * r;
  }

  double refine(double A, double B, double C, double r0, double t0, double v0) const {
    constexpr int kHalf = 10;  // 21 x 21 local grid, 10x zoom per level
    double hr = dr_, ht = dt_, best = v0;
    for (unsigned level = 0; level < grid_.refinement_levels; ++level) {
      double br = r0, bt = t0;
      for (int a = -kHalf; a <= kHalf; ++a) {
        const double r = std::clamp(r0 + hr * a / kHalf, 0.0, 1.0);
        for (int b = -kHalf; b <= kHalf; ++b) {
          const double t = t0 + ht * b / kHalf;
          const double v = eval(A, B, C, r, t);
          if (v > best) {
            best = v;
            br = r;
            bt = t;
          }
        }
      }
      r0 = br;
      t0 = bt;
      hr /= kHalf;
      ht /= kHalf;
    }
    return best;
  }

  OracleGrid grid_;
  double dr_ = 0.0, dt_ = 0.0;
  std::vector<Point> points_;
};

inline double y_oracle(double A, double B, double C) {
  static const YOracle oracle{};
  return oracle(A, B, C);
}

inline double y_oracle(double A, double B, double C, const OracleGrid& grid) {
  return YOracle(grid)(A, B, C);
}

// ---------------------------------------------------------------------------
// Bounding |H_{2,1}| for 0 < tau1 < 1 through Y.

// p + q sqrt(d) with rational p, q.
struct QuadraticSurd {
  ExactRational p, q;
  long d;
  double value() const { return p.to_double() + q.to_double() * std::sqrt(static_cast<double>(d)); }
};

// tau1*^2 = -22/17 + (4/17) sqrt(43): the positive root of 17 t^4 + 44 t^2 - 12.
inline QuadraticSurd tau1_star_squared() { return {ExactRational(-22, 17), ExactRational(4, 17), 43}; }
inline double tau1_star() { return std::sqrt(tau1_star_squared().value()); }

// (-137 + 62 sqrt(43))/20808, the supremum of the bound on (tau1*, 1).
inline QuadraticSurd hankel_upper_range_sup() { return {ExactRational(-137, 20808), ExactRational(62, 20808), 43}; }
// (-2192 + 992 sqrt(43))/289 = Phi2(tau1*).
inline QuadraticSurd phi2_at_tau1_star() { return {ExactRational(-2192, 289), ExactRational(992, 289), 43}; }

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ABC {
  double A, B, C;
};

// A = t^3/(16(1 - t^2)), B = -t/12, C = -(3 + t^2)/(4t), for 0 < t < 1.
inline ABC abc_of_tau1(double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("abc_of_tau1: tau1 must lie in (0, 1)");
  return {t * t * t / (16.0 * (1.0 - t * t)), -t / 12.0, -(3.0 + t * t) / (4.0 * t)};
}

inline double phi1(double t) { return 36.0 - 20.0 * t * t - 19.0 * t * t * t * t; }
inline double phi1_derivative(double t) { return -40.0 * t - 76.0 * t * t * t; }

inline double phi2(double t) {
  const double t2 = t * t;
  return (12.0 - 8.0 * t2 - 3.0 * t2 * t2) * std::sqrt((7.0 + 2.0 * t2) / (3.0 + t2));
}
inline double phi2_derivative(double t) {
  const double t2 = t * t;
  return -t * (348.0 + 452.0 * t2 + 185.0 * t2 * t2 + 24.0 * t2 * t2 * t2) / ((3.0 + t2) * (3.0 + t2)) *
         std::sqrt((3.0 + t2) / (7.0 + 2.0 * t2));
}

// (1/48) t (1 - t^2) Y(A(t), B(t), C(t)), evaluated through the closed Y.
inline double proof_path_bound(double t) {
  const auto [A, B, C] = abc_of_tau1(t);
  return t * (1.0 - t * t) * y_closed(A, B, C).value / 48.0;
}

// The same bound from the explicit polynomials: Phi1/2304 up to tau1*, Phi2/1152 after.
inline double proof_path_closed(double t) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("proof_path_closed: tau1 must lie in (0, 1)");
  return t <= tau1_star() ? phi1(t) / 2304.0 : phi2(t) / 1152.0;
}

struct ProofPathRecord {
  double tau1;
  ABC abc;
  YCase branch;
  double y;
  double bound;
  double closed;
};

inline std::vector<ProofPathRecord> proof_path_trace(const std::vector<double>& taus) {
  std::vector<ProofPathRecord> out;
  out.reserve(taus.size());
  for (double t : taus) {
    const ABC abc = abc_of_tau1(t);
    const YValue y = y_closed(abc.A, abc.B, abc.C);
    out.push_back({t, abc, y.branch, y.value, t * (1.0 - t * t) * y.value / 48.0, proof_path_closed(t)});
  }
  return out;
}

}  // namespace gregory
