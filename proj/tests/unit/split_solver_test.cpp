#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace mixq {
namespace {

using testing::R;
using testing::mix;
using testing::point;
using testing::uniform;

ExactMixture random_mixture(std::mt19937_64& rng) {
  return {Rational(1 + static_cast<long>(rng() % 9), 10), testing::random_lattice(rng),
          testing::random_lattice(rng)};
}

std::vector<Rational> levels_for(const ExactMixture& m) {
  std::vector<Rational> ps;
  for (int i = 1; i < 24; ++i) ps.emplace_back(i, 24);
  for (const auto& k : mixture_distribution(m).knots()) {
    for (const auto& l : {k.left, k.right}) {
      if (l > 0 && l < 1) ps.push_back(l);
    }
  }
  return ps;
}

TEST(FeasibleRange, Examples) {
  EXPECT_EQ(feasible_alpha_range(R("0.5"), R("0.25")), std::make_pair(R("0"), R("0.5")));
  EXPECT_EQ(feasible_alpha_range(R("0.5"), R("0.6")), std::make_pair(R("0.2"), R("1")));
  EXPECT_EQ(feasible_alpha_range(R("0.9"), R("0.5")), std::make_pair(R("4/9"), R("5/9")));
  EXPECT_THROW(feasible_alpha_range(R("0"), R("0.5")), DomainError);
  EXPECT_THROW(feasible_alpha_range(R("1"), R("0.5")), DomainError);
}

TEST(OrderingPredicate, Examples) {
  const auto u = mix("0.5", uniform("0", "1"), uniform("0", "1"));
  EXPECT_TRUE(ordering_predicate(u, R("0.5"), R("0.6")));
  EXPECT_FALSE(ordering_predicate(u, R("0.5"), R("0.4")));
  EXPECT_TRUE(ordering_predicate(mix("0.5", point("0"), point("1")), R("0.25"), R("0.5")));
}

TEST(AlphaStar, Examples) {
  auto s = alpha_star(mix("0.5", uniform("0", "1"), uniform("0", "1")), R("0.5"));
  EXPECT_EQ(s.alpha, R("0.5"));
  EXPECT_EQ(s.beta, R("0.5"));
  EXPECT_FALSE(s.clamped);

  s = alpha_star(mix("0.5", point("0"), point("1")), R("0.25"));
  EXPECT_EQ(s.alpha, R("0.5"));
  EXPECT_EQ(s.beta, R("0"));

  s = alpha_star(mix("0.5", point("0"), uniform("0", "1")), R("0.6"));
  EXPECT_EQ(s.alpha, R("1"));
  EXPECT_EQ(s.beta, R("0.2"));
  EXPECT_TRUE(s.clamped);
}

TEST(AlphaStar, RejectsDegenerateInputs) {
  EXPECT_THROW(alpha_star(mix("0", point("0"), point("1")), R("0.5")), DomainError);
  EXPECT_THROW(alpha_star(mix("0.5", point("0"), point("1")), R("1")), DomainError);
}

TEST(TheoremQuantile, Examples) {
  auto sol = theorem_quantile(mix("0.5", point("0"), point("1")), R("0.25"));
  EXPECT_EQ(sol.s_p, R("0"));
  EXPECT_TRUE(sol.x_attains);
  EXPECT_FALSE(sol.y_attains);
  EXPECT_TRUE(sol.y_quantile.is_negative_infinity());

  sol = theorem_quantile(mix("0.5", uniform("0", "1"), uniform("1", "2")), R("0.25"));
  EXPECT_EQ(sol.s_p, R("0.5"));
  EXPECT_EQ(sol.alpha_star, R("0.5"));
  EXPECT_EQ(sol.beta_star, R("0"));
  EXPECT_TRUE(sol.x_attains);

  sol = theorem_quantile(mix("0.5", point("0"), uniform("0", "1")), R("0.6"));
  EXPECT_EQ(sol.s_p, R("0.2"));
  EXPECT_TRUE(sol.y_attains);
  EXPECT_TRUE(sol.clamped);
}

TEST(TheoremQuantile, DegenerateWeights) {
  const auto x = uniform("0", "1");
  const auto y = point("5");
  auto sol = theorem_quantile(ExactMixture{1, x, y}, R("0.3"));
  EXPECT_EQ(sol.s_p, R("0.3"));
  EXPECT_EQ(sol.alpha_star, R("0.3"));
  sol = theorem_quantile(ExactMixture{0, x, y}, R("0.3"));
  EXPECT_EQ(sol.s_p, R("5"));
  EXPECT_EQ(sol.beta_star, R("0.3"));
  EXPECT_THROW(theorem_quantile(ExactMixture{R("0.5"), x, y}, R("0")), DomainError);
}

TEST(TheoremQuantile, InteriorCrossing) {
  // Crossing strictly between candidate levels.
  const auto sol = theorem_quantile(mix("1/3", uniform("0", "3"), uniform("1", "2")), R("0.5"));
  EXPECT_EQ(sol.s_p, direct_quantile(mix("1/3", uniform("0", "3"), uniform("1", "2")), R("0.5")));
  EXPECT_TRUE(sol.x_attains);
  EXPECT_TRUE(sol.y_attains);
}

TEST(SplitProperty, PredicateIsMonotone) {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 200; ++n) {
    const auto m = random_mixture(rng);
    for (const auto& p : levels_for(m)) {
      const auto [lo, hi] = feasible_alpha_range(m.q, p);
      bool seen_true = false;
      for (int i = 0; i <= 40; ++i) {
        const Rational a = lo + (hi - lo) * Rational(i, 40);
        const bool holds = ordering_predicate(m, p, a);
        ASSERT_FALSE(seen_true && !holds);
        seen_true = seen_true || holds;
      }
    }
  }
}

TEST(SplitProperty, TheoremEqualsDirect) {
  std::mt19937_64 rng(37);
  for (int n = 0; n < 400; ++n) {
    const auto m = random_mixture(rng);
    for (const auto& p : levels_for(m)) {
      const auto sol = theorem_quantile(m, p);
      ASSERT_EQ(sol.s_p, direct_quantile(m, p));
      ASSERT_EQ(m.q * sol.alpha_star + (1 - m.q) * sol.beta_star, p);
      ASSERT_TRUE(sol.x_attains || sol.y_attains);
      ASSERT_EQ(sol.s_p, mixq::max(sol.x_quantile, sol.y_quantile));
    }
  }
}

TEST(SplitProperty, AlphaStarIsTheInfimum) {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 200; ++n) {
    const auto m = random_mixture(rng);
    for (const auto& p : levels_for(m)) {
      const auto split = alpha_star(m, p);
      const auto [lo, hi] = feasible_alpha_range(m.q, p);
      if (split.clamped) {
        ASSERT_EQ(split.alpha, hi);
        continue;
      }
      ASSERT_TRUE(ordering_predicate(m, p, split.alpha) ||
                  ordering_predicate(m, p, split.alpha + (hi - split.alpha) / 1000000));
      if (split.alpha > lo) {
        const Rational below = split.alpha - (split.alpha - lo) / 1000000;
        ASSERT_FALSE(ordering_predicate(m, p, below));
      }
    }
  }
}

TEST(SplitProperty, SwapInvariance) {
  std::mt19937_64 rng(43);
  for (int n = 0; n < 200; ++n) {
    const auto m = random_mixture(rng);
    for (const auto& p : levels_for(m)) {
      ASSERT_EQ(theorem_quantile(m, p).s_p, theorem_quantile(swapped(m), p).s_p);
    }
  }
}

TEST(SplitProperty, Bracketing) {
  std::mt19937_64 rng(47);
  for (int n = 0; n < 200; ++n) {
    const auto m = random_mixture(rng);
    for (const auto& p : levels_for(m)) {
      const auto sol = theorem_quantile(m, p);
      const Rational& s = sol.s_p.value();
      ASSERT_LE(m.x.cdf_left_limit(s), sol.alpha_star);
      ASSERT_LE(sol.alpha_star, m.x.cdf(s));
      ASSERT_LE(m.y.cdf_left_limit(s), sol.beta_star);
      ASSERT_LE(sol.beta_star, m.y.cdf(s));
      if (m.x.is_continuous_at(s)) {
        const Rational mid = (p - m.q * m.x.cdf(s)) / (1 - m.q);
        ASSERT_LE(m.y.cdf_left_limit(s), mid);
        ASSERT_LE(mid, m.y.cdf(s));
      }
    }
  }
}

TEST(FloatSplit, ContinuousPairsMeetAtSp) {
  const std::vector<std::pair<ParametricDistribution, ParametricDistribution>> pairs = {
      {ParametricDistribution::normal(0, 1), ParametricDistribution::normal(1, 2)},
      {ParametricDistribution::normal(3, 1), ParametricDistribution::lognormal(0, 0.5)},
      {ParametricDistribution::exponential(1), ParametricDistribution::normal(2, 1)}};
  for (const auto& [x, y] : pairs) {
    for (double q : {0.2, 0.5, 0.8}) {
      const auto m = testing::fmix(q, x, y);
      for (double p : {0.1, 0.5, 0.9}) {
        const auto sol = theorem_quantile(m, p);
        EXPECT_NEAR(sol.x_quantile.value(), sol.y_quantile.value(), 1e-9);
        EXPECT_NEAR(sol.s_p.value(), direct_quantile(m, p).value(), 1e-9);
        EXPECT_TRUE(sol.x_attains && sol.y_attains);
      }
    }
  }
}

TEST(FloatSplit, PiecewiseInDoublesMatchesExact) {
  std::mt19937_64 rng(53);
  for (int n = 0; n < 100; ++n) {
    const auto m = random_mixture(rng);
    const FloatMixture f{to_double(m.q), FloatDistribution(to_float(m.x)),
                         FloatDistribution(to_float(m.y))};
    for (int i = 1; i < 10; ++i) {
      const Rational p(2 * i - 1, 19);
      EXPECT_NEAR(theorem_quantile(f, to_double(p)).s_p.value(),
                  to_double(theorem_quantile(m, p).s_p.value()), 1e-9);
    }
  }
}

}  // namespace
}  // namespace mixq
