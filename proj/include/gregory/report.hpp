#pragma once

// JSON / CSV renderings of the library's result types. Doubles are written in
// shortest round-trip form so identical inputs give byte-identical files.

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gregory/coefficients.hpp"
#include "gregory/functionals.hpp"
#include "gregory/gregory_psi.hpp"
#include "gregory/series_io.hpp"
#include "gregory/verifier.hpp"
#include "gregory/ymax.hpp"

namespace gregory {

inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

template <Scalar T>
nlohmann::json to_json(const CoefficientVector<T>& v) {
  return {{"mode", std::string(scalar_traits<T>::mode)},
          {"a2", to_json_value(v.a2)},
          {"a3", to_json_value(v.a3)},
          {"a4", to_json_value(v.a4)},
          {"a5", to_json_value(v.a5)},
          {"gamma1", to_json_value(v.gamma1)},
          {"gamma2", to_json_value(v.gamma2)},
          {"gamma3", to_json_value(v.gamma3)}};
}

inline nlohmann::json to_json(const FunctionalReport& r) {
  return {{"name", r.name},
          {"value", nlohmann::json::array({r.value.real(), r.value.imag()})},
          {"magnitude", r.magnitude},
          {"bound", r.bound.to_string()},
          {"attained", r.attained}};
}

inline nlohmann::json to_json(const ParamRecord& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

inline nlohmann::json to_json(const BoundVerdict& v) {
  return {{"functional", v.functional},
          {"claimed_bound", v.claimed_bound.to_string()},
          {"empirical_max", v.empirical_max},
          {"argmax", to_json(v.argmax)},
          {"margin", v.margin},
          {"samples", v.samples},
          {"violated", v.violated},
          {"attained", v.attained}};
}

inline nlohmann::json to_json(const ExactCheck& e) {
  return {{"name", e.name}, {"value", e.value.to_string()}, {"bound", e.bound.to_string()}, {"attained", e.attained}};
}

inline nlohmann::json to_json(const RunReport& r) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  nlohmann::json exact = nlohmann::json::array();
  for (const auto& e : r.exact) exact.push_back(to_json(e));
  return {{"verdicts", std::move(verdicts)}, {"exact_checks", std::move(exact)}, {"exit_code", r.exit_code()}};
}

inline nlohmann::json to_json(const ProofPathRecord& r) {
  return {{"tau1", r.tau1},
          {"A", r.abc.A},
          {"B", r.abc.B},
          {"C", r.abc.C},
          {"case", std::string(to_string(r.branch))},
          {"Y", r.y},
          {"bound", r.bound},
          {"closed_form", r.closed}};
}

// One JSON object per line.
inline std::string to_json_lines(const std::vector<ProofPathRecord>& trace) {
  std::string out;
  for (const auto& r : trace) out += to_json(r).dump() + "\n";
  return out;
}

inline std::string argmax_to_string(const ParamRecord& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ";";
    out += k + "=" + format_double(v);
  }
  return out;
}

inline std::string verdicts_csv(const std::vector<BoundVerdict>& verdicts) {
  std::ostringstream os;
  os << "functional,claimed_bound,empirical_max,margin,samples,violated,attained,argmax\n";
  for (const auto& v : verdicts) {
    os << v.functional << ',' << v.claimed_bound.to_string() << ',' << format_double(v.empirical_max) << ','
       << format_double(v.margin) << ',' << v.samples << ',' << (v.violated ? "true" : "false") << ','
       << (v.attained ? "true" : "false") << ',' << argmax_to_string(v.argmax) << '\n';
  }
  return os.str();
}

inline std::string boundary_csv(const std::vector<BoundaryPoint>& points) {
  std::ostringstream os;
  os << "theta,re,im\n";
  for (const auto& p : points) {
    os << format_double(p.theta) << ',' << format_double(p.value.real()) << ',' << format_double(p.value.imag())
       << '\n';
  }
  return os.str();
}

}  // namespace gregory
