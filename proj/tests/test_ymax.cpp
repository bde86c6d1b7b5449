#include <random>

#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace gregory {
namespace {

TEST(YClosed, Examples) {
  EXPECT_DOUBLE_EQ(y_closed(0, 0, 0).value, 1.0);
  EXPECT_EQ(y_closed(0, 0, 0).branch, YCase::kSameSignSmallB);
  const auto y = y_closed(0.5, 1.0, 0.25);
  EXPECT_NEAR(y.value, 11.0 / 6.0, 1e-15);
  EXPECT_EQ(y.branch, YCase::kSameSignSmallB);
  EXPECT_EQ(classify_case(1, 0, 1), YCase::kSameSignLargeB);
  // At tau1 = 0.4 the (-|A| + |B| + |C|) form equals Phi1/(48 tau1 (1 - tau1^2)).
  const double t = 0.4;
  const auto [A, B, C] = abc_of_tau1(t);
  const auto yt = y_closed(A, B, C);
  EXPECT_EQ(yt.branch, YCase::kRSecond);
  EXPECT_NEAR(yt.value, phi1(t) / (48.0 * t * (1.0 - t * t)), 1e-14);
}

TEST(YOracle, HardCasesFromCoarseGrids) {
  // Triples where a 128 x 128 grid misses the maximum by more than 1e-6.
  const double cases[][3] = {{-0.63308764273169826, 1.2019360237457684, 0.75120463309709917},
                             {1.0868825265759514, 0.071150508860476691, -0.81765748359459378},
                             {1.0233336810868789, 1.1745934596324656, -0.84051703466905581},
                             {-0.64279228103382602, -0.35817404877201864, 0.94788185075378939}};
  for (const auto& c : cases) {
    const double d = y_closed(c[0], c[1], c[2]).value - y_oracle(c[0], c[1], c[2]);
    EXPECT_GE(d, -1e-9);
    EXPECT_LE(d, 1e-6);
  }
}

TEST(YOracle, Examples) {
  EXPECT_NEAR(y_oracle(0, 0, 0), 1.0, 1e-12);
  EXPECT_NEAR(y_oracle(0.5, 1.0, 0.25), 11.0 / 6.0, 1e-6);
  EXPECT_THROW(YOracle(OracleGrid{1, 8}), std::invalid_argument);
}

TEST(YOracle, ClosedFormIsUpperBoundAndTight) {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int s = 0; s < 500; ++s) {
    const double A = u(rng), B = u(rng), C = u(rng);
    const double closed = y_closed(A, B, C).value;
    const double grid = y_oracle(A, B, C);
    EXPECT_LE(grid, closed + 1e-9) << A << ' ' << B << ' ' << C;
    EXPECT_LE(closed - grid, 1e-6) << A << ' ' << B << ' ' << C;
  }
}

TEST(YClosed, UpperBoundOnRandomDiskPoints) {
  std::mt19937_64 rng(31415);
  std::uniform_real_distribution<double> u(-2.0, 2.0), r01(0.0, 1.0);
  for (int s = 0; s < 100000; ++s) {
    const double A = u(rng), B = u(rng), C = u(rng);
    const Complex z = std::polar(std::sqrt(r01(rng)), 6.283185307179586 * r01(rng));
    const double v = std::abs(A + B * z + C * z * z) + 1.0 - std::norm(z);
    ASSERT_LE(v, y_closed(A, B, C).value + 1e-12);
  }
}

TEST(AbcOfTau1, Examples) {
  const auto abc = abc_of_tau1(0.5);
  EXPECT_NEAR(abc.A, 1.0 / 96, 1e-16);
  EXPECT_NEAR(abc.B, -1.0 / 24, 1e-16);
  EXPECT_NEAR(abc.C, -13.0 / 8, 1e-15);
  EXPECT_THROW(abc_of_tau1(0.0), DomainError);
  EXPECT_THROW(abc_of_tau1(1.0), DomainError);
  for (int k = 1; k < 1000; ++k) {
    const auto [A, B, C] = abc_of_tau1(k / 1000.0);
    EXPECT_LT(A * C, 0.0);
  }
  EXPECT_EQ(y_closed(abc_of_tau1(0.3).A, abc_of_tau1(0.3).B, abc_of_tau1(0.3).C).branch, YCase::kRSecond);
  EXPECT_EQ(y_closed(abc_of_tau1(0.8).A, abc_of_tau1(0.8).B, abc_of_tau1(0.8).C).branch, YCase::kRThird);
}

TEST(ProofPath, SwitchPointAndSupremum) {
  const double ts = tau1_star();
  EXPECT_NEAR(ts, 0.498808, 5e-7);
  const double t2 = tau1_star_squared().value();
  EXPECT_NEAR(17 * t2 * t2 + 44 * t2 - 12, 0.0, 1e-13);
  EXPECT_NEAR(hankel_upper_range_sup().value(), 0.0129547, 5e-8);
  EXPECT_NEAR(phi2(ts) / 1152.0, hankel_upper_range_sup().value(), 1e-15);
  EXPECT_NEAR(phi2(ts), phi2_at_tau1_star().value(), 1e-13);
  EXPECT_NEAR(phi1(0.0) / 2304.0, 1.0 / 64, 1e-18);
  // The branch changes at tau1*.
  const auto below = abc_of_tau1(ts - 1e-6);
  const auto above = abc_of_tau1(ts + 1e-6);
  EXPECT_EQ(classify_case(below.A, below.B, below.C), YCase::kRSecond);
  EXPECT_EQ(classify_case(above.A, above.B, above.C), YCase::kRThird);
}

TEST(ProofPath, BoundMatchesPolynomialsAndIsMonotone) {
  double prev = 1.0;
  for (int k = 1; k < 2000; ++k) {
    const double t = k / 2000.0;
    const double b = proof_path_bound(t);
    EXPECT_NEAR(b, proof_path_closed(t), 1e-15) << t;
    EXPECT_LE(b, 1.0 / 64);
    EXPECT_LT(b, prev);
    prev = b;
    EXPECT_LT(phi1_derivative(t), 0.0);
    EXPECT_LT(phi2_derivative(t), 0.0);
    const double h = 1e-6;
    if (t > h && t < 1 - h) {
      EXPECT_NEAR(phi1_derivative(t), (phi1(t + h) - phi1(t - h)) / (2 * h), 1e-6);
      EXPECT_NEAR(phi2_derivative(t), (phi2(t + h) - phi2(t - h)) / (2 * h), 1e-6);
    }
  }
  const auto trace = proof_path_trace({0.25, 0.5, 0.75});
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_EQ(trace[0].branch, YCase::kRSecond);
  EXPECT_EQ(trace[1].branch, YCase::kRThird);
}

}  // namespace
}  // namespace gregory
