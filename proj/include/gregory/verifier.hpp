#pragma once

// Falsification campaigns for the four sharp bounds on S*_G.
//
// A campaign maximises |functional| over a sampled part of the Caratheodory
// class: a tensor grid over the tau coordinates, uniform random points, and a
// zoom refinement around the best point found; or kernel mixes for functionals
// that need c_4. Sample spaces are split into a fixed number of shards, each
// seeded from (seed, shard) and reduced by max in shard order, so results do
// not depend on the number of worker threads.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gregory/caratheodory.hpp"
#include "gregory/coefficients.hpp"
#include "gregory/functionals.hpp"
#include "gregory/ymax.hpp"

namespace gregory {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Functional { kHankelLog, kFeketeSzego, kZalcman, kGenZalcman };
enum class Sampler { kTauGrid, kKernelMix, kBoth };

inline std::string_view to_string(Functional f) {
  switch (f) {
    case Functional::kHankelLog: return "h21";
    case Functional::kFeketeSzego: return "fekete";
    case Functional::kZalcman: return "zalcman";
    case Functional::kGenZalcman: return "gen_zalcman";
  }
  return "unknown";
}

inline std::string_view to_string(Sampler s) {
  switch (s) {
    case Sampler::kTauGrid: return "tau-grid";
    case Sampler::kKernelMix: return "kernel-mix";
    case Sampler::kBoth: return "both";
  }
  return "unknown";
}

// Tensor grid over (tau1, |tau2|, arg tau2, arg tau3). tau1 and |tau2| use
// inclusive linspaces; the two phases are periodic. Functionals that do not
// depend on tau3 ignore `tau3_phase`.
struct TauGridSpec {
  std::size_t tau1 = 100;
  std::size_t radius = 50;
  std::size_t phase = 64;
  std::size_t tau3_phase = 64;
  double tau1_lo = 0.0;
  double tau1_hi = 1.0;
};

struct MixSpec {
  std::size_t atoms = 4;            // atoms per random mix
  std::size_t random_mixes = 0;     // Dirichlet / stratified-angle mixes
  std::size_t symmetric_offsets = 0;  // rotations per symmetric m-atom mix, m = 1..atoms
};

struct CampaignSpec {
  Functional functional = Functional::kHankelLog;
  Sampler sampler = Sampler::kTauGrid;
  TauGridSpec grid;
  MixSpec mix;
  std::size_t random_samples = 0;  // uniform points in tau space
  unsigned refine_levels = 8;      // zoom levels around the best tau point
  std::uint64_t seed = 0x5eed;
  ExactRational mu{0};             // Fekete-Szego parameter
  double attain_tolerance = 1e-6;
  double violation_tolerance = 1e-12;
  std::size_t shards = 16;
  unsigned workers = 0;            // 0: hardware concurrency

  void validate() const {
    const bool tau = sampler != Sampler::kKernelMix;
    const bool mix_used = sampler != Sampler::kTauGrid;
    if (tau) {
      if (grid.tau1 < 2 || grid.radius < 2 || grid.phase < 2 || grid.tau3_phase < 2) {
        throw ConfigError("campaign: grid resolutions must be >= 2 per coordinate");
      }
      if (!(grid.tau1_lo >= 0.0 && grid.tau1_lo <= grid.tau1_hi && grid.tau1_hi <= 1.0)) {
        throw ConfigError("campaign: tau1 range must satisfy 0 <= lo <= hi <= 1");
      }
    }
    if (mix_used && mix.atoms < 1) throw ConfigError("campaign: kernel mixes need >= 1 atom");
    if (functional == Functional::kZalcman && sampler != Sampler::kKernelMix) {
      throw ConfigError("campaign: the Zalcman functional needs c4, use the kernel-mix sampler");
    }
    if (!(attain_tolerance > 0.0) || !(violation_tolerance > 0.0)) {
      throw ConfigError("campaign: tolerances must be > 0");
    }
    if (shards < 1) throw ConfigError("campaign: shards must be >= 1");
  }
};

using ParamRecord = std::vector<std::pair<std::string, double>>;

struct BoundVerdict {
  std::string functional;
  ExactRational claimed_bound;
  double empirical_max = 0.0;
  ParamRecord argmax;
  double margin = 0.0;  // claimed - empirical
  std::size_t samples = 0;
  bool violated = false;
  bool attained = false;
};

namespace detail {

struct Best {
  double value = -1.0;
  ParamRecord where;
  std::size_t samples = 0;

  template <class Describe>
  void offer(double v, Describe&& describe) {
    ++samples;
    if (v > value) {
      value = v;
      where = describe();
    }
  }
  void merge(Best&& other) {
    samples += other.samples;
    if (other.value > value) {
      value = other.value;
      where = std::move(other.where);
    }
  }
};

inline std::uint64_t shard_seed(std::uint64_t seed, std::size_t shard) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(shard), 0x9e3779b9U};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32U) | out[1];
}

// Runs work(shard) for every shard on a pool of threads and max-reduces in shard order.
inline Best run_sharded(std::size_t shards, unsigned workers, const std::function<Best(std::size_t)>& work) {
  std::vector<Best> partial(shards);
  unsigned n = workers != 0 ? workers : std::max(1U, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, shards));
  if (n <= 1) {
    for (std::size_t s = 0; s < shards; ++s) partial[s] = work(s);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n);
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t s = w; s < shards; s += n) partial[s] = work(s);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Best total;
  for (auto& b : partial) total.merge(std::move(b));
  return total;
}

inline double linspace(double lo, double hi, std::size_t n, std::size_t k) {
  return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}
inline double phase(std::size_t n, std::size_t k) {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
}

// A point of tau space: tau1, |tau2|, arg tau2, arg tau3.
using TauPoint = std::array<double, 4>;

inline ParamRecord describe_tau(const TauPoint& x) {
  return {{"tau1", x[0]}, {"tau2_abs", x[1]}, {"tau2_arg", x[2]}, {"tau3_arg", x[3]}};
}

// |functional| at a tau point, in float mode.
inline std::function<double(const TauPoint&)> tau_objective(const CampaignSpec& spec) {
  switch (spec.functional) {
    case Functional::kHankelLog:
      return [](const TauPoint& x) {
        return std::abs(hankel_log_from_polar(x[0], std::polar(x[1], x[2]), std::polar(1.0, x[3])));
      };
    case Functional::kFeketeSzego: {
      const double mu = spec.mu.to_double();
      return [mu](const TauPoint& x) {
        const double t1 = x[0];
        const Complex t2 = std::polar(x[1], x[2]);
        const Complex c1 = 2.0 * t1;
        const Complex c2 = 2.0 * t1 * t1 + 2.0 * (1.0 - t1 * t1) * t2;
        const Complex a2 = c1 / 4.0;
        const Complex a3 = (3.0 * c2 - c1 * c1) / 24.0;
        return std::abs(a3 - mu * a2 * a2);
      };
    }
    case Functional::kGenZalcman:
      return [](const TauPoint& x) {
        const double t1 = x[0];
        const Complex t2 = std::polar(x[1], x[2]);
        const Complex t3 = std::polar(1.0, x[3]);
        const double s1 = 1.0 - t1 * t1;
        const double s2 = 1.0 - x[1] * x[1];
        const Complex c1 = 2.0 * t1;
        const Complex c2 = 2.0 * t1 * t1 + 2.0 * s1 * t2;
        const Complex c3 = 2.0 * t1 * t1 * t1 + 4.0 * s1 * t1 * t2 - 2.0 * s1 * t1 * t2 * t2 + 2.0 * s1 * s2 * t3;
        const auto v = coeffs_from_c_unchecked<Complex>(c1, c2, c3, Complex{});
        return std::abs(gen_zalcman(v));
      };
    case Functional::kZalcman:
      break;
  }
  throw ConfigError("campaign: functional has no tau-space objective");
}

inline double mix_objective(Functional f, const KernelMix& mix) {
  const Complex c1 = mix.coefficient(1), c2 = mix.coefficient(2), c3 = mix.coefficient(3), c4 = mix.coefficient(4);
  const auto v = coeffs_from_c_unchecked<Complex>(c1, c2, c3, c4);
  switch (f) {
    case Functional::kHankelLog: return std::abs(hankel_log_from_a(v));
    case Functional::kFeketeSzego: break;
    case Functional::kZalcman: return std::abs(zalcman(v));
    case Functional::kGenZalcman: return std::abs(gen_zalcman(v));
  }
  throw ConfigError("campaign: functional has no kernel-mix objective");
}

inline ParamRecord describe_mix(const KernelMix& mix) {
  ParamRecord r;
  for (std::size_t i = 0; i < mix.size(); ++i) {
    r.emplace_back("w" + std::to_string(i), mix.weights()[i]);
    r.emplace_back("theta" + std::to_string(i), mix.angles()[i]);
  }
  return r;
}

inline Best tau_campaign(const CampaignSpec& spec) {
  const auto objective = tau_objective(spec);
  const auto& g = spec.grid;
  const bool uses_tau3 = spec.functional != Functional::kFeketeSzego;
  const std::size_t n3 = uses_tau3 ? g.tau3_phase : 1;

  // Grid: shard over the tau1 index.
  Best best = run_sharded(spec.shards, spec.workers, [&](std::size_t shard) {
    Best local;
    for (std::size_t i = shard; i < g.tau1; i += spec.shards) {
      TauPoint x{};
      x[0] = linspace(g.tau1_lo, g.tau1_hi, g.tau1, i);
      for (std::size_t j = 0; j < g.radius; ++j) {
        x[1] = linspace(0.0, 1.0, g.radius, j);
        for (std::size_t k = 0; k < g.phase; ++k) {
          x[2] = phase(g.phase, k);
          for (std::size_t l = 0; l < n3; ++l) {
            x[3] = phase(n3, l);
            local.offer(objective(x), [&] { return describe_tau(x); });
          }
        }
      }
    }
    return local;
  });

  // Uniform random points: tau2 uniform in the disk, tau3 on the circle.
  if (spec.random_samples > 0) {
    best.merge(run_sharded(spec.shards, spec.workers, [&](std::size_t shard) {
      Best local;
      std::mt19937_64 rng(shard_seed(spec.seed, shard));
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const std::size_t count = spec.random_samples / spec.shards + (shard < spec.random_samples % spec.shards ? 1 : 0);
      for (std::size_t s = 0; s < count; ++s) {
        const TauPoint x{g.tau1_lo + (g.tau1_hi - g.tau1_lo) * unit(rng), std::sqrt(unit(rng)),
                         2.0 * std::numbers::pi * unit(rng), 2.0 * std::numbers::pi * unit(rng)};
        local.offer(objective(x), [&] { return describe_tau(x); });
      }
      return local;
    }));
  }

  // Zoom refinement: an 11^d local grid of half-width one current step
  // around the incumbent, shrinking 5x per level.
  if (spec.refine_levels > 0 && !best.where.empty()) {
    TauPoint center{};
    for (std::size_t d = 0; d < 4; ++d) center[d] = best.where[d].second;
    std::array<double, 4> half{(g.tau1_hi - g.tau1_lo) / static_cast<double>(g.tau1 - 1),
                               1.0 / static_cast<double>(g.radius - 1), phase(g.phase, 1),
                               uses_tau3 ? phase(g.tau3_phase, 1) : 0.0};
    constexpr int kSide = 5;
    for (unsigned level = 0; level < spec.refine_levels; ++level) {
      TauPoint x{};
      TauPoint next = center;
      for (int a = -kSide; a <= kSide; ++a) {
        x[0] = std::clamp(center[0] + half[0] * a / kSide, g.tau1_lo, g.tau1_hi);
        for (int b = -kSide; b <= kSide; ++b) {
          x[1] = std::clamp(center[1] + half[1] * b / kSide, 0.0, 1.0);
          for (int c = -kSide; c <= kSide; ++c) {
            x[2] = center[2] + half[2] * c / kSide;
            for (int d = uses_tau3 ? -kSide : 0; d <= (uses_tau3 ? kSide : 0); ++d) {
              x[3] = center[3] + half[3] * d / kSide;
              const double v = objective(x);
              ++best.samples;
              if (v > best.value) {
                best.value = v;
                best.where = describe_tau(x);
                next = x;
              }
            }
          }
        }
      }
      center = next;
      for (auto& h : half) h /= kSide;
    }
  }
  return best;
}

inline Best mix_campaign(const CampaignSpec& spec) {
  const auto& m = spec.mix;
  Best best;
  // Symmetric m-atom mixes: p(z) = (1 + e^{i m t} z^m)/(1 - e^{i m t} z^m).
  for (std::size_t atoms = 1; atoms <= m.atoms; ++atoms) {
    const std::size_t offsets = std::max<std::size_t>(m.symmetric_offsets, 1);
    for (std::size_t k = 0; k < offsets; ++k) {
      const auto mix = KernelMix::symmetric(atoms, phase(offsets, k) / static_cast<double>(atoms));
      best.offer(mix_objective(spec.functional, mix), [&] { return describe_mix(mix); });
    }
  }
  if (m.random_mixes > 0) {
    best.merge(run_sharded(spec.shards, spec.workers, [&](std::size_t shard) {
      Best local;
      std::mt19937_64 rng(shard_seed(spec.seed ^ 0xa5a5a5a5ULL, shard));
      const std::size_t count = m.random_mixes / spec.shards + (shard < m.random_mixes % spec.shards ? 1 : 0);
      for (std::size_t s = 0; s < count; ++s) {
        const auto mix = random_mix(rng, m.atoms);
        local.offer(mix_objective(spec.functional, mix), [&] { return describe_mix(mix); });
      }
      return local;
    }));
  }
  return best;
}

}  // namespace detail

inline ExactRational claimed_bound(const CampaignSpec& spec) {
  switch (spec.functional) {
    case Functional::kHankelLog: return kHankelLogBound;
    case Functional::kFeketeSzego: return fekete_bound_exact(spec.mu);
    case Functional::kZalcman: return kZalcmanBound;
    case Functional::kGenZalcman: return kGenZalcmanBound;
  }
  throw ConfigError("campaign: unknown functional");
}

// Runs the campaign and compares its maximum against `claimed`.
inline BoundVerdict run_campaign(const CampaignSpec& spec, const ExactRational& claimed) {
  spec.validate();
  detail::Best best;
  if (spec.sampler != Sampler::kKernelMix) best.merge(detail::tau_campaign(spec));
  if (spec.sampler != Sampler::kTauGrid) best.merge(detail::mix_campaign(spec));
  if (best.samples == 0) throw ConfigError("campaign: sampler produced no points");

  BoundVerdict v;
  v.functional = std::string(to_string(spec.functional));
  if (spec.functional == Functional::kFeketeSzego) v.functional += "(mu=" + spec.mu.to_string() + ")";
  v.claimed_bound = claimed;
  v.empirical_max = best.value;
  v.argmax = std::move(best.where);
  v.samples = best.samples;
  const double bound = claimed.to_double();
  v.margin = bound - v.empirical_max;
  v.violated = v.empirical_max > bound + spec.violation_tolerance;
  v.attained = v.empirical_max >= bound - spec.attain_tolerance;
  return v;
}

inline BoundVerdict run_campaign(const CampaignSpec& spec) { return run_campaign(spec, claimed_bound(spec)); }

// ---------------------------------------------------------------------------
// Default campaigns.

inline CampaignSpec default_hankel_spec(std::uint64_t seed = 0x5eed) {
  CampaignSpec s;
  s.functional = Functional::kHankelLog;
  s.sampler = Sampler::kTauGrid;
  s.grid = {100, 50, 64, 64, 0.0, 1.0};
  s.random_samples = 1'000'000;
  s.seed = seed;
  return s;
}

inline CampaignSpec default_fekete_spec(const ExactRational& mu, std::uint64_t seed = 0x5eed) {
  CampaignSpec s;
  s.functional = Functional::kFeketeSzego;
  s.sampler = Sampler::kTauGrid;
  s.grid = {200, 100, 128, 2, 0.0, 1.0};
  s.random_samples = 100'000;
  s.mu = mu;
  s.seed = seed;
  return s;
}

inline CampaignSpec default_zalcman_spec(std::uint64_t seed = 0x5eed) {
  CampaignSpec s;
  s.functional = Functional::kZalcman;
  s.sampler = Sampler::kKernelMix;
  s.mix = {4, 1'000'000, 360};
  s.seed = seed;
  return s;
}

inline CampaignSpec default_gen_zalcman_spec(std::uint64_t seed = 0x5eed) {
  CampaignSpec s;
  s.functional = Functional::kGenZalcman;
  s.sampler = Sampler::kBoth;
  s.grid = {64, 32, 64, 64, 0.0, 1.0};
  s.random_samples = 100'000;
  s.mix = {4, 200'000, 360};
  s.seed = seed;
  return s;
}

inline BoundVerdict verify_hankel(const CampaignSpec& spec) { return run_campaign(spec, kHankelLogBound); }
inline BoundVerdict verify_fekete(const ExactRational& mu, CampaignSpec spec) {
  spec.mu = mu;
  return run_campaign(spec, fekete_bound_exact(mu));
}
inline BoundVerdict verify_zalcman(const CampaignSpec& spec) { return run_campaign(spec, kZalcmanBound); }
inline BoundVerdict verify_gen_zalcman(const CampaignSpec& spec) { return run_campaign(spec, kGenZalcmanBound); }

// ---------------------------------------------------------------------------
// Exact attainment by the extremal functions.

struct ExactCheck {
  std::string name;
  ExactRational value;  // signed value of the functional
  ExactRational bound;
  bool attained = false;
};

inline std::vector<ExactCheck> exact_attainment_checks() {
  std::vector<ExactCheck> out;
  auto add = [&](std::string name, const ExactRational& value, const ExactRational& bound) {
    out.push_back({std::move(name), value, bound, abs(value) == bound});
  };
  const auto f1 = coefficient_vector(extremal(1).series);
  const auto f2 = coefficient_vector(extremal(2).series);
  const auto f3 = coefficient_vector(extremal(3).series);
  const auto f4 = coefficient_vector(extremal(4).series);
  add("h21 at extremal k=2", hankel_log(f2), kHankelLogBound);
  for (const ExactRational& mu : {ExactRational(-2), ExactRational(-1), ExactRational(2), ExactRational(3)}) {
    add("fekete(mu=" + mu.to_string() + ") at extremal k=1", fekete_szego(f1, mu), fekete_bound_exact(mu));
  }
  for (const ExactRational& mu : {ExactRational(-2, 3), ExactRational(0), ExactRational(1), ExactRational(4, 3)}) {
    add("fekete(mu=" + mu.to_string() + ") at extremal k=2", fekete_szego(f2, mu), fekete_bound_exact(mu));
  }
  add("zalcman at extremal k=4", zalcman(f4), kZalcmanBound);
  add("gen_zalcman at extremal k=3", gen_zalcman(f3), kGenZalcmanBound);
  return out;
}

struct RunReport {
  std::vector<BoundVerdict> verdicts;
  std::vector<ExactCheck> exact;

  bool any_violation() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.violated; });
  }
  bool all_attained() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.attained; }) &&
           std::all_of(exact.begin(), exact.end(), [](const auto& e) { return e.attained; });
  }
  // 0: every bound verified and attained, 1: a violation or a failed attainment.
  int exit_code() const { return any_violation() || !all_attained() ? 1 : 0; }
};

inline RunReport run_all(std::uint64_t seed, unsigned workers = 0) {
  RunReport report;
  std::vector<CampaignSpec> specs{default_hankel_spec(seed), default_fekete_spec(ExactRational(1), seed),
                                  default_zalcman_spec(seed), default_gen_zalcman_spec(seed)};
  for (auto& s : specs) {
    s.workers = workers;
    report.verdicts.push_back(run_campaign(s));
  }
  report.exact = exact_attainment_checks();
  return report;
}

}  // namespace gregory
