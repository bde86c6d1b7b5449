// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/recurrence_oracle.hpp"
#include "support/test_support.hpp"

namespace {

using namespace gregory;
using gregory::testing::Q;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// AC1: Gregory values.
void gregory_exactness(Outcome& o) {
  const auto t0 = Clock::now();
  const auto g = gregory::gregory(6);
  const double secs = seconds_since(t0);
  const std::vector<ExactRational> expected{1, Q(1, 2), Q(-1, 12), Q(1, 24), Q(-19, 720), Q(3, 160), Q(-863, 60480)};
  o.require(g == expected, "G_0..G_6");
  o.require(secs < 1.0, "runtime < 1 s");
  o.detail << "G_6=" << g[6] << " time=" << secs << "s";
}

// AC2: sharp H_{2,1} bound.
void hankel_attainment(Outcome& o) {
  const auto h = hankel_log(coefficient_vector(extremal(2).series));
  o.require(abs(h) == Q(1, 64), "|H21(f)| == 1/64 exactly for k = 2");
  auto spec = default_hankel_spec();
  spec.workers = 1;
  const auto t0 = Clock::now();
  const auto v = run_campaign(spec);
  const double secs = seconds_since(t0);
  o.require(v.empirical_max >= 1.0 / 64 - 1e-6 && v.empirical_max <= 1.0 / 64 + 1e-12, "campaign max in band");
  o.require(v.samples >= 1'000'000, "~1e6 samples");
  o.require(secs < 120.0, "runtime < 2 min single-threaded");
  o.detail << "exact=" << h << " max=" << format_double(v.empirical_max) << " samples=" << v.samples
           << " time=" << secs << "s";
}

// AC3: values along the proof.
void proof_path(Outcome& o) {
  // tau1 = 1 forces c1 = c2 = c3 = 2.
  const auto exact = hankel_log_from_params(CaratheodoryParams<ExactRational>(1, Q(1, 2), Q(-1, 3)));
  o.require(exact == Q(1, 768), "Case I value 1/768 exact");
  CampaignSpec one;
  one.grid = {2, 16, 16, 16, 1.0, 1.0};
  one.refine_levels = 0;
  const auto v1 = run_campaign(one);
  o.require(std::abs(v1.empirical_max - 1.0 / 768) <= 1e-15, "tau1 = 1 campaign gives 1/768");

  CampaignSpec upper;
  upper.grid = {32, 32, 32, 32, tau1_star(), 1.0};
  upper.refine_levels = 10;
  const auto v3 = run_campaign(upper);
  const double surd = hankel_upper_range_sup().value();
  const double phi = phi2(tau1_star()) / 1152.0;
  o.require(std::abs(v3.empirical_max - phi) <= 1e-9, "campaign on [tau1*, 1] within 1e-9 of Phi2(tau1*)/1152");
  o.require(std::abs(surd - phi) <= 1e-12, "surd equals Phi2(tau1*)/1152");
  o.require(std::abs(phi2_at_tau1_star().value() - phi2(tau1_star())) <= 1e-12, "Phi2(tau1*) surd form");
  o.detail << "caseI=" << exact << " sup=" << format_double(v3.empirical_max) << " expected=" << format_double(surd);
}

// AC4: closed Y against the grid oracle.
void y_equivalence(Outcome& o) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const auto t0 = Clock::now();
  double lo = 1e300, hi = -1e300;
  for (int s = 0; s < 10'000; ++s) {
    const double A = u(rng), B = u(rng), C = u(rng);
    const double d = y_closed(A, B, C).value - y_oracle(A, B, C);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  const double secs = seconds_since(t0);
  o.require(lo >= -1e-9 && hi <= 1e-6, "difference in [-1e-9, 1e-6]");
  o.require(secs < 300.0, "runtime < 5 min");
  o.detail << "diff in [" << format_double(lo) << ", " << format_double(hi) << "] time=" << secs << "s";
}

// AC5: Fekete-Szego.
void fekete(Outcome& o) {
  for (const auto& mu : {Q(-2), Q(-1), Q(-2, 3), Q(0), Q(1), Q(4, 3), Q(2)}) {
    const auto v = run_campaign(default_fekete_spec(mu));
    const double bound = fekete_bound_exact(mu).to_double();
    const bool ok = v.empirical_max >= bound - 1e-3 && v.empirical_max <= bound + 1e-12;
    o.require(ok, "mu=" + mu.to_string());
    o.detail << "mu=" << mu << ":" << format_double(v.empirical_max) << " ";
  }
  const auto f2 = coefficient_vector(extremal(1).series);
  const auto f3 = coefficient_vector(extremal(2).series);
  for (const auto& mu : {Q(-5), Q(-2), Q(-1), Q(-2, 3), Q(4, 3), Q(2), Q(7)}) {
    o.require(abs(fekete_szego(f2, mu)) == fekete_bound_exact(mu), "f2 attains at mu=" + mu.to_string());
  }
  for (const auto& mu : {Q(-2, 3), Q(0), Q(1, 2), Q(1), Q(4, 3)}) {
    o.require(abs(fekete_szego(f3, mu)) == fekete_bound_exact(mu), "f3 attains at mu=" + mu.to_string());
  }
}

// AC6: |a3^2 - a5| <= 1/8.
void zalcman_bound(Outcome& o) {
  const auto v = zalcman(coefficient_vector(extremal(4).series));
  o.require(abs(v) == Q(1, 8), "extremal k = 4 gives 1/8 exactly");
  const auto c = run_campaign(default_zalcman_spec());
  o.require(!c.violated && c.empirical_max <= 1.0 / 8 + 1e-12, "campaign max <= 1/8 + 1e-12");
  o.require(c.attained, "attained within 1e-6");
  o.detail << "exact=" << v << " max=" << format_double(c.empirical_max) << " samples=" << c.samples;
}

// AC7: |a2 a3 - a4| <= 1/6.
void gen_zalcman_bound(Outcome& o) {
  const auto v = gen_zalcman(coefficient_vector(extremal(3).series));
  o.require(abs(v) == Q(1, 6), "extremal k = 3 gives 1/6 exactly");
  const auto c = run_campaign(default_gen_zalcman_spec());
  o.require(!c.violated && c.empirical_max <= 1.0 / 6 + 1e-12, "campaign max <= 1/6 + 1e-12");
  o.require(c.attained, "attained within 1e-6");
  o.detail << "exact=" << v << " max=" << format_double(c.empirical_max) << " samples=" << c.samples;
}

// AC8: consistency between closed forms and the series solver.
void consistency(Outcome& o) {
  std::mt19937_64 rng(8);
  int equal = 0;
  for (int s = 0; s < 500; ++s) {
    const auto p = sample_p(random_rational_mix(rng, 1 + s % 4, 32), 4);
    const auto closed = coeffs_from_c(p[1], p[2], p[3], p[4]);
    const auto solved = coefficient_vector(solve_subordination(schwarz_from_p(p), 5));
    testing::oracle::Poly pc;
    for (const auto& x : p.coeffs()) pc.push_back(x.raw());
    const auto ref = testing::oracle::solve(testing::oracle::schwarz(pc, 5), 5);
    const bool same = closed == solved && closed.a2 == ExactRational(ref[2]) && closed.a3 == ExactRational(ref[3]) &&
                      closed.a4 == ExactRational(ref[4]) && closed.a5 == ExactRational(ref[5]);
    // gamma1 gamma3 - gamma2^2 against the a-form and the c-form.
    const bool hankel = hankel_log(closed) == hankel_log_from_a(closed) &&
                        hankel_log(closed) == hankel_log_from_c(p[1], p[2], p[3]);
    if (same && hankel) ++equal;
  }
  o.require(equal == 500, "500/500 samples agree exactly");
  // z^4 coefficient of Psi(omega): the c1^2 c2 term is 3060 c1^2 c2 (a c2^3 term would be wrong).
  const std::vector<ExactRational> c{1, 1, 0, 0, 0};
  const auto q = compose(psi_series<ExactRational>(4), schwarz_from_p(RationalSeries(c)));
  o.require(q[4] == Q(-649, 11520), "z^4 coefficient at c = (1,0,0,0)");
  const std::vector<ExactRational> d{1, 1, 1, 0, 0};
  const auto q2 = compose(psi_series<ExactRational>(4), schwarz_from_p(RationalSeries(d)));
  o.require(q2[4] == Q(-649 + 3060 - 1680, 11520), "z^4 coefficient at c = (1,1,0,0)");
  o.detail << "agree=" << equal << "/500 z4(1,1,0,0)=" << q2[4];
}

// AC9: properties.
void properties(Outcome& o) {
  std::mt19937_64 rng(9);
  bool series_ok = true;
  for (int s = 0; s < 100; ++s) {
    const auto b = testing::random_rational_series(rng, 1 + s % 16, true);
    const auto a = testing::random_rational_series(rng, 1 + s % 16);
    series_ok = series_ok && exp_series(log_series(b)) == b && differentiate(integrate(a)) == a;
  }
  o.require(series_ok, "exp(log b) = b and d/dz integral a = a");

  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  double worst_rot = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const auto mix = random_mix(rng, 4);
    const double th = u(rng);
    std::vector<double> ang(mix.angles());
    for (double& a : ang) a += th;
    const KernelMix rot(mix.weights(), ang);
    auto h = [](const KernelMix& m) {
      return hankel_log(coeffs_from_c(m.coefficient(1), m.coefficient(2), m.coefficient(3), m.coefficient(4)));
    };
    worst_rot = std::max(worst_rot, std::abs(h(rot) - std::polar(1.0, 4 * th) * h(mix)));
  }
  o.require(worst_rot <= 1e-14, "H21 rotation factor e^{4i theta}");

  double min_re = 1e300;
  for (int s = 0; s < 200; ++s) {
    const auto mix = random_mix(rng, 1 + s % 6);
    DiskGrid{}.for_each([&](Complex z) { min_re = std::min(min_re, mix(z).real()); });
    const CaratheodoryParams<Complex> params(u(rng) / (2 * std::numbers::pi), std::polar(0.9, u(rng)),
                                             std::polar(1.0, u(rng)));
    DiskGrid{}.for_each([&](Complex z) { min_re = std::min(min_re, p_closed(params, z).real()); });
  }
  o.require(min_re > 0.0, "Re p > 0 on the disk grid");

  o.require(zalcman_condition_gap() == Q(-253483853, 6046617600), "Zalcman precondition gap");
  const auto chain = gen_zalcman_condition_chain();
  o.require(chain[0] == Q(7, 72) && chain[1] == Q(7, 24) && chain[2] == Q(7, 12) && chain[0] <= chain[1] &&
                chain[1] <= chain[2],
            "7/72 <= 7/24 <= 7/12");
  o.detail << "rot_err=" << format_double(worst_rot) << " min_re=" << format_double(min_re)
           << " gap=" << zalcman_condition_gap();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 gregory-exactness", gregory_exactness},
      {"AC2 hankel-attainment", hankel_attainment},
      {"AC3 proof-path", proof_path},
      {"AC4 y-oracle-equivalence", y_equivalence},
      {"AC5 fekete-szego", fekete},
      {"AC6 zalcman", zalcman_bound},
      {"AC7 generalized-zalcman", gen_zalcman_bound},
      {"AC8 consistency", consistency},
      {"AC9 properties", properties},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failed;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
