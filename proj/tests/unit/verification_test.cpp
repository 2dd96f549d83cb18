#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace mixq {
namespace {

using testing::R;
using testing::mix;
using testing::point;
using testing::uniform;

bool check_passed(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c.passed;
  }
  ADD_FAILURE() << "missing check " << name;
  return false;
}

TEST(GridOracle, Examples) {
  const auto steps = mix("0.5", point("0"), point("1"));
  GridOracleConfig<Rational> cfg{R("-1"), R("2"), 3001};
  Rational s = grid_oracle_quantile(steps, R("0.25"), cfg);
  EXPECT_GE(s, R("0"));
  EXPECT_LT(s - R("0"), grid_step(cfg));

  const auto u = mix("0.5", uniform("0", "1"), uniform("1", "2"));
  cfg = {R("0"), R("2"), 1'000'000};
  s = grid_oracle_quantile(u, R("0.25"), cfg);
  EXPECT_GE(s, R("0.5"));
  EXPECT_LT(s - R("0.5"), grid_step(cfg));

  const auto three = mix("0.7", point("3"), point("3"));
  cfg = {R("2"), R("4"), 1'000'000};
  s = grid_oracle_quantile(three, R("0.5"), cfg);
  EXPECT_GE(s, R("3"));
  EXPECT_LT(s - R("3"), grid_step(cfg));
}

TEST(GridOracle, Errors) {
  const auto steps = mix("0.5", point("0"), point("1"));
  EXPECT_THROW(grid_oracle_quantile(steps, R("0.75"), {R("-1"), R("0.5"), 100}), DomainError);
  EXPECT_THROW(grid_oracle_quantile(steps, R("0.25"), {R("1"), R("0"), 100}), DomainError);
  EXPECT_THROW(grid_oracle_quantile(steps, R("0.25"), {R("0"), R("1"), 1}), DomainError);
}

TEST(MonteCarlo, Examples) {
  EXPECT_EQ(monte_carlo_quantile(MixtureSpec(R("1"), point("3"), uniform("0", "1")), R("0.5"), 10000, 1),
            3.0);
  const MixtureSpec u(R("0.5"), ParametricDistribution::uniform(0, 1),
                      ParametricDistribution::uniform(0, 1));
  EXPECT_NEAR(monte_carlo_quantile(u, R("0.5"), 1'000'000, 2), 0.5, 0.002);
  EXPECT_EQ(monte_carlo_quantile(MixtureSpec(R("0.5"), point("0"), point("1")), R("0.25"),
                                 1'000'000, 3),
            0.0);
  EXPECT_THROW(monte_carlo_quantile(u, R("0.5"), 999, 2), DomainError);
}

TEST(Generator, Deterministic) {
  const auto cfg = default_instance_config(99);
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto a = generate_instance(cfg, i);
    const auto b = generate_instance(cfg, i);
    EXPECT_TRUE(same_mixture(a.mixture, b.mixture));
    EXPECT_EQ(a.p, b.p);
    EXPECT_TRUE(a.mixture.is_exact());
    EXPECT_GT(a.p, 0);
    EXPECT_LT(a.p, 1);
  }
}

TEST(Generator, SeedsDiffer) {
  int differing = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto a = generate_instance(default_instance_config(1), i);
    const auto b = generate_instance(default_instance_config(2), i);
    differing += !(same_mixture(a.mixture, b.mixture) && a.p == b.p);
  }
  EXPECT_GT(differing, 15);
}

TEST(Generator, OffsetBreakpoints) {
  auto cfg = default_instance_config(5);
  cfg.allow_coincident_breakpoints = false;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto inst = generate_instance(cfg, i);
    for (const auto& k : inst.mixture.y.piecewise().knots()) {
      EXPECT_EQ(boost::multiprecision::denominator(k.x), 2);
    }
  }
}

TEST(CrossCheck, Examples) {
  auto r = cross_check(MixtureSpec(R("0.5"), point("0"), point("1")), R("0.25"));
  EXPECT_TRUE(r.passed()) << check_json(r).dump();
  EXPECT_EQ(r.cell, "4b");
  EXPECT_TRUE(r.exact);

  r = cross_check(MixtureSpec(R("0.5"), uniform("0", "1"), uniform("1", "2")), R("0.25"));
  EXPECT_TRUE(r.passed()) << check_json(r).dump();
  EXPECT_EQ(r.cell, "1b");

  r = cross_check(MixtureSpec(R("0.3"), ParametricDistribution::normal(0, 1),
                              ParametricDistribution::normal(1, 1)),
                  R("0.5"));
  EXPECT_TRUE(r.passed()) << check_json(r).dump();
  EXPECT_EQ(r.cell, "1a");
  ASSERT_TRUE(r.deviation);
  EXPECT_LE(*r.deviation, 1e-9);
}

TEST(CrossCheck, ImpossibleCellIsReportedNotThrown) {
  const auto r = cross_check(MixtureSpec(R("0.5"), point("3"), point("3")), R("0.5"));
  EXPECT_EQ(r.cell, "4d");
  EXPECT_FALSE(check_passed(r, "cell_feasible"));
  EXPECT_TRUE(check_passed(r, "theorem_equals_direct"));
  EXPECT_TRUE(check_passed(r, "transposition"));
}

TEST(Suite, ParallelMatchesSerial) {
  const auto cfg = default_instance_config(77);
  const auto a = run_suite(cfg, 300, 1);
  const auto b = run_suite(cfg, 300, 3);
  EXPECT_EQ(suite_json(a).dump(), suite_json(b).dump());
  ASSERT_EQ(a.reports.size(), 300u);
  for (std::size_t i = 0; i < a.reports.size(); ++i) EXPECT_EQ(a.reports[i].first, i);
}

TEST(Suite, CoreOraclesAgree) {
  const auto s = run_suite(default_instance_config(123), 1000, 1);
  for (const auto& [index, report] : s.reports) {
    for (const char* name : {"theorem_equals_direct", "grid_oracle", "sandwich", "split_identity",
                             "bracketing", "attainment", "swap_invariance", "transposition"}) {
      ASSERT_TRUE(check_passed(report, name)) << index << " " << name;
    }
  }
  EXPECT_EQ(s.census.count("2b"), 0u);
}

}  // namespace
}  // namespace mixq
