#pragma once

// Gregory coefficients G_n and Psi(z) = z / ln(1 + z) = sum G_n z^n.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gregory/series.hpp"

namespace gregory {

using GregorySequence = std::vector<ExactRational>;

// G_0..G_{n_max} from the convolution of z/ln(1+z) with ln(1+z)/z:
//   sum_{k=0}^{n} G_k (-1)^{n-k} / (n-k+1) = [n == 0].
inline GregorySequence gregory(std::size_t n_max) {
  GregorySequence g;
  g.reserve(n_max + 1);
  g.emplace_back(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ExactRational acc;
    for (std::size_t k = 0; k < n; ++k) {
      const long j = static_cast<long>(n - k);
      ExactRational term = g[k] / ExactRational(j + 1);
      if (j % 2 == 1) term = -term;
      acc += term;
    }
    g.push_back(-acc);
  }
  return g;
}

// Psi through z^order.
template <Scalar T>
TruncatedSeries<T> psi_series(std::size_t order) {
  const auto g = gregory(order);
  std::vector<T> v;
  v.reserve(g.size());
  for (const auto& c : g) v.push_back(scalar_traits<T>::from_rational(c));
  return TruncatedSeries<T>(std::move(v));
}

// ln(1+z)/z = sum (-1)^n z^n / (n+1).
template <Scalar T>
TruncatedSeries<T> log1p_over_z_series(std::size_t order) {
  std::vector<T> v(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    const long sign = n % 2 == 0 ? 1 : -1;
    v[n] = rational_constant<T>(sign, static_cast<long>(n + 1));
  }
  return TruncatedSeries<T>(std::move(v));
}

// Closed form z / log(1+z), principal branch, with the removable value 1 at 0.
inline Complex psi_closed(Complex z) {
  if (z == Complex{}) return {1.0, 0.0};
  return z / std::log(Complex{1.0, 0.0} + z);
}

struct BoundaryPoint {
  double theta;
  Complex value;
};

// Psi(e^{i theta}) from the closed form at `samples` angles in (0, 2 pi).
// Angles are offset from the grid 2 pi j / n so that theta = pi (where
// ln(1 + e^{i theta}) = ln 0) is never hit: by half a step for even n and a
// quarter step for odd n.
inline std::vector<BoundaryPoint> psi_boundary(std::size_t samples) {
  if (samples < 8) throw std::invalid_argument("psi_boundary: need at least 8 samples");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  const double offset = samples % 2 == 0 ? 0.5 : 0.25;
  std::vector<BoundaryPoint> out;
  out.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = (static_cast<double>(j) + offset) * step;
    out.push_back({theta, psi_closed(std::polar(1.0, theta))});
  }
  return out;
}

}  // namespace gregory
