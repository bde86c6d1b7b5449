// gregory_lab: command-line front end.
//
// Exit codes: 0 success / all bounds verified, 1 bound violated or not attained,
// 2 configuration or usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gregory.hpp"

namespace {

using namespace gregory;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

constexpr const char* kOutDirEnv = "GREGORY_LAB_OUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return ".";
}

// Writes to `path` (relative paths resolve against the output directory), or
// to stdout when path is empty or "-".
void emit(const std::string& text, const std::string& path, const std::string& out_dir) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  fs::path target(path);
  if (target.is_relative()) target = output_dir(out_dir) / target;
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::ofstream os(target, std::ios::binary);
  if (!os) throw UsageError("cannot open output file " + target.string());
  os << text;
}

std::string rational_table(const std::vector<ExactRational>& values, const std::string& head) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "n" << head << '\n';
  for (std::size_t n = 0; n < values.size(); ++n) os << std::setw(6) << n << values[n].to_string() << '\n';
  return os.str();
}

std::string rational_csv(const std::vector<ExactRational>& values, const std::string& head) {
  std::ostringstream os;
  os << "n," << head << '\n';
  for (std::size_t n = 0; n < values.size(); ++n) os << n << ',' << values[n].to_string() << '\n';
  return os.str();
}

std::string scalar_text(const ExactRational& r) { return r.to_string(); }
std::string scalar_text(const Complex& c) {
  return format_double(c.real()) + (c.imag() < 0 ? "-" : "+") + format_double(std::abs(c.imag())) + "i";
}

template <Scalar T>
std::vector<FunctionalReport> functional_reports(const CoefficientVector<T>& v, const T& mu) {
  const ExactRational mu_exact =
      scalar_traits<T>::exact ? ExactRational::parse(scalar_text(mu)) : ExactRational::from_double(std::real(scalar_traits<T>::to_complex(mu)));
  return {make_report("h21", hankel_log(v), kHankelLogBound),
          make_report("fekete(mu=" + mu_exact.to_string() + ")", fekete_szego(v, mu), fekete_bound_exact(mu_exact)),
          make_report("zalcman", zalcman(v), kZalcmanBound),
          make_report("gen_zalcman", gen_zalcman(v), kGenZalcmanBound)};
}

template <Scalar T>
std::string coefficients_text(const CoefficientVector<T>& v, const std::vector<FunctionalReport>& reports,
                              const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["coefficients"] = to_json(v);
    j["functionals"] = nlohmann::json::array();
    for (const auto& r : reports) j["functionals"].push_back(to_json(r));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  const std::vector<std::pair<std::string, const T*>> rows{{"a2", &v.a2},         {"a3", &v.a3},
                                                           {"a4", &v.a4},         {"a5", &v.a5},
                                                           {"gamma1", &v.gamma1}, {"gamma2", &v.gamma2},
                                                           {"gamma3", &v.gamma3}};
  if (format == "csv") {
    os << "name,value\n";
    for (const auto& [k, x] : rows) os << k << ',' << scalar_text(*x) << '\n';
    os << "functional,magnitude,bound,attained\n";
    for (const auto& r : reports) {
      os << r.name << ',' << format_double(r.magnitude) << ',' << r.bound.to_string() << ','
         << (r.attained ? "true" : "false") << '\n';
    }
    return os.str();
  }
  for (const auto& [k, x] : rows) os << std::left << std::setw(10) << k << scalar_text(*x) << '\n';
  os << '\n' << std::setw(22) << "functional" << std::setw(24) << "magnitude" << std::setw(10) << "bound"
     << "attained\n";
  for (const auto& r : reports) {
    os << std::setw(22) << r.name << std::setw(24) << format_double(r.magnitude) << std::setw(10)
       << r.bound.to_string() << (r.attained ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string verdicts_table(const std::vector<BoundVerdict>& verdicts) {
  std::ostringstream os;
  os << std::left << std::setw(20) << "functional" << std::setw(10) << "bound" << std::setw(26) << "empirical_max"
     << std::setw(12) << "samples" << std::setw(10) << "violated" << "attained\n";
  for (const auto& v : verdicts) {
    os << std::setw(20) << v.functional << std::setw(10) << v.claimed_bound.to_string() << std::setw(26)
       << format_double(v.empirical_max) << std::setw(12) << v.samples << std::setw(10)
       << (v.violated ? "yes" : "no") << (v.attained ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string exact_table(const std::vector<ExactCheck>& checks) {
  std::ostringstream os;
  os << std::left << std::setw(36) << "exact check" << std::setw(14) << "value" << std::setw(10) << "bound"
     << "attained\n";
  for (const auto& e : checks) {
    os << std::setw(36) << e.name << std::setw(14) << e.value.to_string() << std::setw(10) << e.bound.to_string()
       << (e.attained ? "yes" : "no") << '\n';
  }
  return os.str();
}

Functional parse_functional(const std::string& s) {
  if (s == "h21") return Functional::kHankelLog;
  if (s == "fekete") return Functional::kFeketeSzego;
  if (s == "zalcman") return Functional::kZalcman;
  if (s == "gen_zalcman" || s == "genzalcman") return Functional::kGenZalcman;
  throw UsageError("unknown functional '" + s + "'");
}

Sampler parse_sampler(const std::string& s) {
  if (s == "tau-grid") return Sampler::kTauGrid;
  if (s == "kernel-mix") return Sampler::kKernelMix;
  if (s == "both") return Sampler::kBoth;
  throw UsageError("unknown sampler '" + s + "'");
}

CampaignSpec default_spec(Functional f, const ExactRational& mu, std::uint64_t seed) {
  switch (f) {
    case Functional::kHankelLog: return default_hankel_spec(seed);
    case Functional::kFeketeSzego: return default_fekete_spec(mu, seed);
    case Functional::kZalcman: return default_zalcman_spec(seed);
    case Functional::kGenZalcman: return default_gen_zalcman_spec(seed);
  }
  throw UsageError("unknown functional");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gregory_lab: coefficient bounds for starlike functions associated with Gregory coefficients"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  std::string format = "table";
  std::string out_dir;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out-dir", out_dir,
                 std::string("Directory for report files (default: $") + kOutDirEnv + " or the current directory)");

  // gregory
  auto* gregory_cmd = app.add_subcommand("gregory", "Print the Gregory coefficients G_0..G_n as exact rationals");
  long gregory_n = 6;
  gregory_cmd->add_option("--n", gregory_n, "Largest index")->capture_default_str();

  // psi
  auto* psi_cmd = app.add_subcommand("psi", "Print the series of Psi(z) = z/ln(1+z)");
  long psi_order = static_cast<long>(kDefaultSeriesOrder);
  psi_cmd->add_option("--order", psi_order, "Truncation order")->capture_default_str();

  // boundary
  auto* boundary_cmd = app.add_subcommand("boundary", "Sample the boundary curve Psi(e^{i theta}) as CSV");
  long boundary_samples = 512;
  std::string boundary_out;
  boundary_cmd->add_option("--samples", boundary_samples, "Number of angles (>= 8)")->capture_default_str();
  boundary_cmd->add_option("--out", boundary_out, "CSV file (default: stdout)");

  // coeffs
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficients a2..a5, gamma1..3 and functionals for one member");
  std::optional<std::string> tau1, tau2, tau3;
  double tau2_im = 0.0, tau3_im = 0.0;
  std::size_t mix_size = 4, mix_count = 1;
  std::uint64_t coeffs_seed = 0x5eed;
  std::string mu_text = "1";
  std::string dump_params;
  coeffs_cmd->add_option("--tau1", tau1, "tau1 in [0,1] (rational or decimal)");
  coeffs_cmd->add_option("--tau2", tau2, "Real part of tau2 (rational or decimal)");
  coeffs_cmd->add_option("--tau3", tau3, "Real part of tau3 (rational or decimal)");
  coeffs_cmd->add_option("--tau2-im", tau2_im, "Imaginary part of tau2 (switches to float mode)")->capture_default_str();
  coeffs_cmd->add_option("--tau3-im", tau3_im, "Imaginary part of tau3 (switches to float mode)")->capture_default_str();
  coeffs_cmd->add_option("--mix-size", mix_size, "Atoms per random kernel mix (used when no --tau1)")->capture_default_str();
  coeffs_cmd->add_option("--count", mix_count, "Number of random kernel mixes")->capture_default_str();
  coeffs_cmd->add_option("--seed", coeffs_seed, "Sampler seed")->capture_default_str();
  coeffs_cmd->add_option("--mu", mu_text, "Fekete-Szego parameter")->capture_default_str();
  coeffs_cmd->add_option("--dump-params", dump_params, "Write the sampled mixes to this CSV file");

  // extremal
  auto* extremal_cmd = app.add_subcommand("extremal", "Exact series of z exp(int_0^z (Psi(t^k)-1)/t dt)");
  long extremal_k = 1;
  long extremal_order = 0;
  std::string extremal_mu = "1";
  extremal_cmd->add_option("--k", extremal_k, "Power k in Psi(t^k)")->capture_default_str();
  extremal_cmd->add_option("--order", extremal_order, "Truncation order (0: 4k+2)")->capture_default_str();
  extremal_cmd->add_option("--mu", extremal_mu, "Fekete-Szego parameter")->capture_default_str();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run bound-verification campaigns");
  std::string which = "all";
  std::string verify_mu = "1";
  std::uint64_t verify_seed = 0x5eed;
  std::optional<std::string> sampler_text;
  std::optional<std::size_t> res_tau1, res_radius, res_phase, res_tau3, random_samples, random_mixes, atoms, offsets;
  std::optional<double> tau1_lo, tau1_hi, attain_tol;
  std::optional<unsigned> refine;
  unsigned workers = 0;
  std::string verify_json = "verdicts.json", verify_csv = "verdicts.csv";
  bool no_files = false;
  verify_cmd->add_option("functional", which, "h21 | fekete | zalcman | gen_zalcman | all")
      ->check(CLI::IsMember({"h21", "fekete", "zalcman", "gen_zalcman", "genzalcman", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--mu", verify_mu, "Fekete-Szego parameter")->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "Campaign seed")->capture_default_str();
  verify_cmd->add_option("--sampler", sampler_text, "tau-grid | kernel-mix | both (default per functional)");
  verify_cmd->add_option("--tau1-res", res_tau1, "Grid points in tau1 (default 100 for h21)");
  verify_cmd->add_option("--radius-res", res_radius, "Grid points in |tau2| (default 50 for h21)");
  verify_cmd->add_option("--phase-res", res_phase, "Grid points in arg tau2 (default 64 for h21)");
  verify_cmd->add_option("--tau3-res", res_tau3, "Grid points in arg tau3 (default 64 for h21)");
  verify_cmd->add_option("--tau1-lo", tau1_lo, "Lower end of the tau1 range (default 0)");
  verify_cmd->add_option("--tau1-hi", tau1_hi, "Upper end of the tau1 range (default 1)");
  verify_cmd->add_option("--random", random_samples, "Uniform random tau points (default 1000000 for h21)");
  verify_cmd->add_option("--mixes", random_mixes, "Random kernel mixes (default 1000000 for zalcman)");
  verify_cmd->add_option("--atoms", atoms, "Atoms per kernel mix (default 4)");
  verify_cmd->add_option("--offsets", offsets, "Rotations per symmetric mix (default 360)");
  verify_cmd->add_option("--refine", refine, "Zoom refinement levels (default 8)");
  verify_cmd->add_option("--attain-tol", attain_tol, "Attainment tolerance (default 1e-6)");
  verify_cmd->add_option("--workers", workers, "Worker threads (0: hardware concurrency)")->capture_default_str();
  verify_cmd->add_option("--json-out", verify_json, "Verdict JSON file name")->capture_default_str();
  verify_cmd->add_option("--csv-out", verify_csv, "Verdict CSV file name")->capture_default_str();
  verify_cmd->add_flag("--no-files", no_files, "Do not write report files");

  // report
  auto* report_cmd = app.add_subcommand("report", "Run every campaign plus exact attainment checks and write reports");
  std::uint64_t report_seed = 0x5eed;
  unsigned report_workers = 0;
  report_cmd->add_option("--seed", report_seed, "Campaign seed")->capture_default_str();
  report_cmd->add_option("--workers", report_workers, "Worker threads (0: hardware concurrency)")->capture_default_str();

  // proofpath
  auto* proof_cmd = app.add_subcommand("proofpath", "Trace the Y(A,B,C) case split over tau1 as JSON lines");
  std::size_t proof_samples = 99;
  std::string proof_out;
  proof_cmd->add_option("--samples", proof_samples, "tau1 = k/(samples+1), k = 1..samples")->capture_default_str();
  proof_cmd->add_option("--out", proof_out, "JSON-lines file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gregory_cmd->parsed()) {
      if (gregory_n < 0 || gregory_n > 1000) throw UsageError("--n must lie in [0, 1000]");
      const auto g = gregory::gregory(static_cast<std::size_t>(gregory_n));
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& x : g) j.push_back(x.to_string());
        std::cout << j.dump() << '\n';
      } else {
        std::cout << (format == "csv" ? rational_csv(g, "G_n") : rational_table(g, "G_n"));
      }
      return kExitOk;
    }

    if (psi_cmd->parsed()) {
      if (psi_order < 0 || psi_order > static_cast<long>(kMaxSeriesOrder)) throw UsageError("--order must lie in [0, 64]");
      const auto psi = psi_series<ExactRational>(static_cast<std::size_t>(psi_order));
      if (format == "json") {
        std::cout << to_json(psi).dump() << '\n';
      } else {
        const std::vector<ExactRational> v(psi.coeffs().begin(), psi.coeffs().end());
        std::cout << (format == "csv" ? rational_csv(v, "coeff") : rational_table(v, "coeff"));
      }
      return kExitOk;
    }

    if (boundary_cmd->parsed()) {
      if (boundary_samples < 8) throw UsageError("--samples must be >= 8");
      emit(boundary_csv(psi_boundary(static_cast<std::size_t>(boundary_samples))), boundary_out, out_dir);
      return kExitOk;
    }

    if (coeffs_cmd->parsed()) {
      if (tau1) {
        const bool exact = tau2_im == 0.0 && tau3_im == 0.0;
        const ExactRational t1 = ExactRational::parse(*tau1);
        const ExactRational t2 = tau2 ? ExactRational::parse(*tau2) : ExactRational(0);
        const ExactRational t3 = tau3 ? ExactRational::parse(*tau3) : ExactRational(0);
        if (exact) {
          const CaratheodoryParams<ExactRational> params(t1, t2, t3);
          const auto c = c_from_tau(params);
          const auto p = p_from_tau(params, 4);
          const auto v = coeffs_from_c(c[0], c[1], c[2], p[4]);
          const auto mu = ExactRational::parse(mu_text);
          std::cout << coefficients_text(v, functional_reports(v, mu), format);
        } else {
          const CaratheodoryParams<Complex> params(Complex{t1.to_double(), 0.0}, Complex{t2.to_double(), tau2_im},
                                                   Complex{t3.to_double(), tau3_im});
          const auto p = p_from_tau(params, 4);
          const auto v = coeffs_from_c(p[1], p[2], p[3], p[4]);
          const Complex mu{ExactRational::parse(mu_text).to_double(), 0.0};
          std::cout << coefficients_text(v, functional_reports(v, mu), format);
        }
        return kExitOk;
      }
      if (mix_size < 1 || mix_count < 1) throw UsageError("--mix-size and --count must be >= 1");
      std::mt19937_64 rng(coeffs_seed);
      std::ostringstream dump;
      dump << "sample,atom,weight,theta\n";
      const Complex mu{ExactRational::parse(mu_text).to_double(), 0.0};
      for (std::size_t s = 0; s < mix_count; ++s) {
        const auto mix = random_mix(rng, mix_size);
        for (std::size_t i = 0; i < mix.size(); ++i) {
          dump << s << ',' << i << ',' << format_double(mix.weights()[i]) << ',' << format_double(mix.angles()[i])
               << '\n';
        }
        const auto v = coeffs_from_c(mix.coefficient(1), mix.coefficient(2), mix.coefficient(3), mix.coefficient(4));
        std::cout << coefficients_text(v, functional_reports(v, mu), format);
      }
      if (!dump_params.empty()) emit(dump.str(), dump_params, out_dir);
      return kExitOk;
    }

    if (extremal_cmd->parsed()) {
      if (extremal_k < 1) throw UsageError("--k must be >= 1");
      if (extremal_order < 0 || extremal_order > static_cast<long>(kMaxSeriesOrder)) {
        throw UsageError("--order must lie in [0, 64]");
      }
      const auto f = extremal(static_cast<unsigned>(extremal_k), static_cast<std::size_t>(extremal_order));
      const auto v = coefficient_vector(f.series);
      const auto reports = functional_reports(v, ExactRational::parse(extremal_mu));
      if (format == "json") {
        nlohmann::json j;
        j["k"] = f.k;
        j["series"] = to_json(f.series);
        j["coefficients"] = to_json(v);
        j["functionals"] = nlohmann::json::array();
        for (const auto& r : reports) j["functionals"].push_back(to_json(r));
        std::cout << j.dump(2) << '\n';
      } else {
        std::ostringstream os;
        os << "k = " << f.k << "\nseries:";
        for (std::size_t n = 0; n <= f.series.order(); ++n) {
          if (!f.series[n].is_zero()) os << ' ' << (f.series[n].sign() < 0 ? "" : "+") << f.series[n] << "*z^" << n;
        }
        os << " + O(z^" << f.series.order() + 1 << ")\n\n";
        std::cout << os.str() << coefficients_text(v, reports, format == "csv" ? "csv" : "table");
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const ExactRational mu = ExactRational::parse(verify_mu);
      std::vector<Functional> selected;
      if (which == "all") {
        selected = {Functional::kHankelLog, Functional::kFeketeSzego, Functional::kZalcman, Functional::kGenZalcman};
      } else {
        selected = {parse_functional(which)};
      }
      std::vector<BoundVerdict> verdicts;
      for (Functional f : selected) {
        CampaignSpec spec = default_spec(f, mu, verify_seed);
        if (sampler_text) spec.sampler = parse_sampler(*sampler_text);
        if (res_tau1) spec.grid.tau1 = *res_tau1;
        if (res_radius) spec.grid.radius = *res_radius;
        if (res_phase) spec.grid.phase = *res_phase;
        if (res_tau3) spec.grid.tau3_phase = *res_tau3;
        if (tau1_lo) spec.grid.tau1_lo = *tau1_lo;
        if (tau1_hi) spec.grid.tau1_hi = *tau1_hi;
        if (random_samples) spec.random_samples = *random_samples;
        if (random_mixes) spec.mix.random_mixes = *random_mixes;
        if (atoms) spec.mix.atoms = *atoms;
        if (offsets) spec.mix.symmetric_offsets = *offsets;
        if (refine) spec.refine_levels = *refine;
        if (attain_tol) spec.attain_tolerance = *attain_tol;
        spec.workers = workers;
        verdicts.push_back(run_campaign(spec));
      }
      nlohmann::json j = nlohmann::json::array();
      for (const auto& v : verdicts) j.push_back(to_json(v));
      if (format == "json") {
        std::cout << j.dump(2) << '\n';
      } else if (format == "csv") {
        std::cout << verdicts_csv(verdicts);
      } else {
        std::cout << verdicts_table(verdicts);
      }
      if (!no_files) {
        emit(j.dump(2) + "\n", verify_json, out_dir);
        emit(verdicts_csv(verdicts), verify_csv, out_dir);
      }
      const bool bad = std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.violated || !v.attained; });
      return bad ? kExitViolation : kExitOk;
    }

    if (report_cmd->parsed()) {
      const RunReport report = run_all(report_seed, report_workers);
      std::vector<double> taus;
      for (int k = 1; k <= 99; ++k) taus.push_back(k / 100.0);
      emit(to_json(report).dump(2) + "\n", "report.json", out_dir);
      emit(verdicts_csv(report.verdicts), "verdicts.csv", out_dir);
      emit(to_json_lines(proof_path_trace(taus)), "proofpath.jsonl", out_dir);
      if (format == "json") {
        std::cout << to_json(report).dump(2) << '\n';
      } else {
        std::cout << verdicts_table(report.verdicts) << '\n' << exact_table(report.exact);
      }
      return report.exit_code() == 0 ? kExitOk : kExitViolation;
    }

    if (proof_cmd->parsed()) {
      if (proof_samples < 1) throw UsageError("--samples must be >= 1");
      std::vector<double> taus;
      for (std::size_t k = 1; k <= proof_samples; ++k) {
        taus.push_back(static_cast<double>(k) / static_cast<double>(proof_samples + 1));
      }
      emit(to_json_lines(proof_path_trace(taus)), proof_out, out_dir);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitConfig;
}
