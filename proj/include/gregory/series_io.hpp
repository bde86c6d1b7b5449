#pragma once

// JSON form of a series and a mode-tagged series for data read at runtime.
//
//   {"order": N, "mode": "rational", "coeffs": ["1", "1/2", "-1/12", ...]}
//   {"order": N, "mode": "complex",  "coeffs": [[re, im], ...]}

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "gregory/series.hpp"

namespace gregory {

class ModeMismatch : public SeriesError {
 public:
  ModeMismatch() : SeriesError("series arithmetic: rational and complex modes cannot be mixed") {}
};

inline nlohmann::json to_json_value(const ExactRational& r) { return r.to_string(); }
inline nlohmann::json to_json_value(const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); }

template <Scalar T>
nlohmann::json to_json(const TruncatedSeries<T>& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json_value(c));
  return {{"order", s.order()}, {"mode", std::string(scalar_traits<T>::mode)}, {"coeffs", std::move(coeffs)}};
}

// A series whose scalar mode is only known at runtime.
using DynamicSeries = std::variant<RationalSeries, ComplexSeries>;

inline std::string_view mode_of(const DynamicSeries& s) {
  return std::holds_alternative<RationalSeries>(s) ? scalar_traits<ExactRational>::mode
                                                   : scalar_traits<Complex>::mode;
}

namespace detail {

template <class Op>
DynamicSeries same_mode(const DynamicSeries& a, const DynamicSeries& b, Op op) {
  if (a.index() != b.index()) throw ModeMismatch();
  if (const auto* ra = std::get_if<RationalSeries>(&a)) return op(*ra, std::get<RationalSeries>(b));
  return op(std::get<ComplexSeries>(a), std::get<ComplexSeries>(b));
}

}  // namespace detail

inline DynamicSeries add(const DynamicSeries& a, const DynamicSeries& b) {
  return detail::same_mode(a, b, [](const auto& x, const auto& y) -> DynamicSeries { return x + y; });
}
inline DynamicSeries mul(const DynamicSeries& a, const DynamicSeries& b) {
  return detail::same_mode(a, b, [](const auto& x, const auto& y) -> DynamicSeries { return x * y; });
}
inline DynamicSeries div(const DynamicSeries& a, const DynamicSeries& b) {
  return detail::same_mode(a, b, [](const auto& x, const auto& y) -> DynamicSeries { return x / y; });
}
inline DynamicSeries compose(const DynamicSeries& a, const DynamicSeries& b) {
  return detail::same_mode(a, b, [](const auto& x, const auto& y) -> DynamicSeries { return compose(x, y); });
}

inline nlohmann::json to_json(const DynamicSeries& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

inline DynamicSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("mode") || !j.contains("coeffs")) {
    throw std::invalid_argument("series JSON: expected keys order, mode, coeffs");
  }
  const auto order = j.at("order").get<std::size_t>();
  const auto mode = j.at("mode").get<std::string>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != order + 1) {
    throw std::invalid_argument("series JSON: coeffs must hold order+1 entries");
  }
  if (mode == scalar_traits<ExactRational>::mode) {
    std::vector<ExactRational> v;
    for (const auto& c : coeffs) v.push_back(ExactRational::parse(c.get<std::string>()));
    return RationalSeries(std::move(v));
  }
  if (mode == scalar_traits<Complex>::mode) {
    std::vector<Complex> v;
    for (const auto& c : coeffs) {
      if (!c.is_array() || c.size() != 2) throw std::invalid_argument("series JSON: complex entries are [re, im]");
      v.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return ComplexSeries(std::move(v));
  }
  throw std::invalid_argument("series JSON: unknown mode '" + mode + "'");
}

}  // namespace gregory
