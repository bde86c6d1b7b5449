#include <random>

#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace gregory {
namespace {

using testing::cseries;
using testing::Q;
using testing::rseries;

TEST(Rational, CanonicalFormAndParsing) {
  EXPECT_EQ(Q(2, -4).to_string(), "-1/2");
  EXPECT_EQ(Q(6, 3).to_string(), "2");
  EXPECT_EQ(ExactRational::parse("-863/60480"), Q(-863, 60480));
  EXPECT_EQ(ExactRational::parse("0.125"), Q(1, 8));
  EXPECT_EQ(ExactRational::parse("1e-3"), Q(1, 1000));
  EXPECT_EQ(ExactRational::parse("-2.5E1"), Q(-25));
  EXPECT_THROW(ExactRational::parse("1/0"), std::domain_error);
  EXPECT_THROW(ExactRational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Q(1) / Q(0), std::domain_error);
}

TEST(Series, AddExamples) {
  EXPECT_EQ(rseries({1, 1}) + rseries({1, -1}), rseries({2, 0}));
  const auto psi = psi_series<ExactRational>(8);
  EXPECT_EQ(psi + RationalSeries::zero(8), psi);
  EXPECT_EQ(rseries({0, Q(1, 2), Q(-1, 24)}) + rseries({0, Q(1, 2), Q(1, 24)}), RationalSeries::identity(2));
}

TEST(Series, AddTakesTheSmallerOrder) {
  EXPECT_EQ((rseries({1, 2, 3}) + rseries({1, 1})).order(), 1u);
}

TEST(Series, MulExamples) {
  EXPECT_EQ(rseries({1, 1}) * rseries({1, -1}), rseries({1, 0, -1}));
  const auto one = psi_series<ExactRational>(20) * log1p_over_z_series<ExactRational>(20);
  EXPECT_EQ(one, RationalSeries::one(20));
  const auto sq = rseries({1, 2, 2, 2});
  EXPECT_EQ(sq * sq, rseries({1, 4, 8, 12}));
}

TEST(Series, DivExamples) {
  EXPECT_EQ(rseries({1, 0, -1}) / rseries({1, -1, 0}), rseries({1, 1, 0}));
  // z f2'/f2 for f2 = z + z^2/2 + z^3/12 gives the leading terms of Psi.
  const auto f2_over_z = rseries({1, Q(1, 2), Q(1, 12)});
  const auto z_f2_prime_over_z = rseries({1, 1, Q(1, 4)});
  const auto q = z_f2_prime_over_z / f2_over_z;
  EXPECT_EQ(q, psi_series<ExactRational>(2));
  const auto geo = RationalSeries::one(6) / rseries({1, 1}).truncated(1);
  EXPECT_EQ(geo.order(), 1u);
  const auto geo6 = RationalSeries::one(6) / RationalSeries(std::vector<ExactRational>{1, 1}, 6);
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(geo6[k], Q(k % 2 == 0 ? 1 : -1));
  EXPECT_THROW(RationalSeries::one(3) / RationalSeries::identity(3), SeriesError);
}

TEST(Series, ComposeExamples) {
  const auto psi = psi_series<ExactRational>(10);
  EXPECT_EQ(compose(psi, RationalSeries::identity(10)), psi);
  const auto z2 = RationalSeries::monomial(2, 1, 10);
  const auto c = compose(psi, z2);
  EXPECT_EQ(c[0], Q(1));
  EXPECT_EQ(c[1], Q(0));
  EXPECT_EQ(c[2], Q(1, 2));
  EXPECT_EQ(c[3], Q(0));
  EXPECT_EQ(c[4], Q(-1, 12));
  // p = (1+z)/(1-z) gives omega = z and Psi(omega) = 1 + (c1/4) z + ... with c1 = 2.
  const auto p = RationalSeries(std::vector<ExactRational>{1, 1}, 6) / RationalSeries(std::vector<ExactRational>{1, -1}, 6);
  const auto omega = schwarz_from_p(p);
  EXPECT_EQ(compose(psi_series<ExactRational>(6), omega)[1], p[1] / Q(4));
  EXPECT_THROW(compose(psi, RationalSeries::one(4)), SeriesError);
}

TEST(Series, ComposeOrderRuleUsesValuation) {
  // Outer known through z^2 composed with z^3 is exact through z^8.
  const auto c = compose(rseries({1, 1, 1}), RationalSeries::monomial(3, 1, 20));
  EXPECT_EQ(c.order(), 8u);
  EXPECT_EQ(c[6], Q(1));
}

TEST(Series, LogExpExamples) {
  EXPECT_EQ(log_series(RationalSeries::one(5)), RationalSeries::zero(5));
  const auto l = log_series(RationalSeries(std::vector<ExactRational>{1, 1}, 6));
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(l[k], Q(k % 2 == 1 ? 1 : -1, static_cast<long>(k)));
  EXPECT_EQ(exp_series(RationalSeries::zero(4)), RationalSeries::one(4));
  const auto e = exp_series(rseries({0, Q(1, 2), Q(-1, 24), Q(1, 72)}));
  EXPECT_EQ(e[1], Q(1, 2));
  EXPECT_EQ(e[2], Q(1, 12));
  EXPECT_EQ(e[3], Q(1, 72));
  EXPECT_EQ(exp_series(l), RationalSeries(std::vector<ExactRational>{1, 1}, 6));
  EXPECT_THROW(log_series(rseries({2, 1})), SeriesError);
  EXPECT_THROW(exp_series(rseries({1, 1})), SeriesError);
}

TEST(Series, IntegrateDifferentiateExamples) {
  EXPECT_EQ(integrate(RationalSeries::one(0)), RationalSeries::identity(1));
  EXPECT_EQ(integrate(RationalSeries::zero(3)), RationalSeries::zero(4));
  // integral of (Psi(t) - 1)/t
  const auto psi = psi_series<ExactRational>(4);
  const auto integrand = (psi - RationalSeries::one(4)).shifted_down(1);
  const auto i = integrate(integrand);
  EXPECT_EQ(i[1], Q(1, 2));
  EXPECT_EQ(i[2], Q(-1, 24));
  EXPECT_EQ(i[3], Q(1, 72));
  EXPECT_EQ(differentiate(RationalSeries::identity(1)), RationalSeries::one(0));
  EXPECT_EQ(differentiate(rseries({0, 1, 0, Q(1, 4)})), rseries({1, 0, Q(3, 4)}));
  EXPECT_THROW(differentiate(RationalSeries::one(0)), SeriesError);
}

TEST(Series, EvaluateExamples) {
  EXPECT_EQ(evaluate(rseries({1, 1}), Complex{}), Complex(1.0, 0.0));
  EXPECT_EQ(evaluate(psi_series<ExactRational>(8), Complex{}), Complex(1.0, 0.0));
  std::vector<ExactRational> geo(61, ExactRational(2));
  geo[0] = 1;
  EXPECT_NEAR(std::abs(evaluate(RationalSeries(geo), Complex{0.5, 0.0}) - 3.0), 0.0, 1e-9);
  EXPECT_THROW(evaluate(rseries({1, 1}), Complex{0.99, 0.0}), SeriesError);
  EXPECT_THROW(evaluate(rseries({1, 1}), Complex{0.5, 0.0}, 0.5), SeriesError);
}

TEST(Series, OrderLimits) {
  EXPECT_NO_THROW(RationalSeries::zero(kMaxSeriesOrder));
  EXPECT_THROW(RationalSeries::zero(kMaxSeriesOrder + 1), SeriesError);
  EXPECT_THROW(RationalSeries(std::vector<ExactRational>{}), SeriesError);
  EXPECT_THROW(rseries({1, 2}).at(2), std::out_of_range);
}

class SeriesRoundTrip : public ::testing::TestWithParam<unsigned> {};

TEST_P(SeriesRoundTrip, ExactIdentitiesOnRandomRationals) {
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<std::size_t> ord(1, 16);
  const std::size_t n = ord(rng);
  const auto a = testing::random_rational_series(rng, n);
  const auto b = testing::random_rational_series(rng, n, /*unit_constant=*/true);
  const auto z0 = testing::random_rational_series(rng, n, false, /*zero_constant=*/true);
  // exp(log(b)) = b and log(exp(z0)) = z0
  EXPECT_EQ(exp_series(log_series(b)), b);
  EXPECT_EQ(log_series(exp_series(z0)), z0);
  // d/dz integrate(a) = a
  EXPECT_EQ(differentiate(integrate(a)), a);
  // (a * b) / b = a, (a / b) * b = a
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ((a / b) * b, a);
  // log of a product is the sum of logs
  EXPECT_EQ(log_series(b * b), log_series(b) + log_series(b));
  // Float mode agrees with the exact result.
  const auto exact = compose(b, z0) * a;
  const auto approx = compose(to_complex(b), to_complex(z0)) * to_complex(a);
  ASSERT_EQ(exact.order(), approx.order());
  for (std::size_t k = 0; k <= exact.order(); ++k) {
    const double ref = exact[k].to_double();
    EXPECT_NEAR(approx[k].real(), ref, 1e-12 * std::max(1.0, std::abs(ref))) << "k=" << k;
  }
}

INSTANTIATE_TEST_SUITE_P(RandomSeeds, SeriesRoundTrip, ::testing::Range(1u, 41u));

TEST(SeriesIo, JsonRoundTrip) {
  const auto r = rseries({1, Q(-1, 12), Q(3, 160)});
  const auto j = to_json(r);
  EXPECT_EQ(j.dump(), R"({"coeffs":["1","-1/12","3/160"],"mode":"rational","order":2})");
  EXPECT_EQ(std::get<RationalSeries>(series_from_json(j)), r);
  const auto c = cseries({{1.0, 0.0}, {0.5, -0.25}});
  EXPECT_EQ(std::get<ComplexSeries>(series_from_json(to_json(c))), c);
  EXPECT_THROW(series_from_json(nlohmann::json::parse(R"({"order":3,"mode":"rational","coeffs":["1"]})")),
               std::invalid_argument);
}

TEST(SeriesIo, ModeMismatchIsRejected) {
  const DynamicSeries r = rseries({1, 1});
  const DynamicSeries c = cseries({{1.0, 0.0}, {1.0, 0.0}});
  EXPECT_THROW(add(r, c), ModeMismatch);
  EXPECT_THROW(mul(c, r), ModeMismatch);
  EXPECT_THROW(div(r, c), ModeMismatch);
  EXPECT_EQ(mode_of(mul(r, r)), "rational");
  EXPECT_EQ(mode_of(add(c, c)), "complex");
}

}  // namespace
}  // namespace gregory
