#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "support/seed.hpp"
#include "tistar/diophantine.hpp"

using namespace tistar;

TEST(CStar, Examples) {
  EXPECT_EQ(c_star({4, 4, 0, 1, 1}), 0);
  EXPECT_EQ(c_star({8, 0, 0, 1, 5}), 16);
  EXPECT_EQ(c_star({5, 3, 7, 1, 1}), 11);
  EXPECT_THROW(c_star({5, 2, 0, 1, 1}), std::invalid_argument);
}

TEST(SolveByDivisors, SpiderCollisionInstance) {
  BoxDioProblem p{8, 0, 0, 1, 5};
  auto w = solve_by_divisors(p);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (DivisorWitness{8, 2, 1, 3}));
}

TEST(SolveByDivisors, ZeroCStarUsesInterval) {
  BoxDioProblem p{0, 0, 0, 3, 3};
  auto w = solve_by_divisors(p);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->q, 0);
  EXPECT_EQ(w->x, w->y);
  EXPECT_EQ(w->p, w->x + w->y);
  EXPECT_EQ(divisor_candidates(p), (std::vector<std::int64_t>{2, 3, 4, 5, 6}));
}

TEST(SolveByDivisors, ConsecutiveSquaresHaveNoGapOfOne) {
  EXPECT_FALSE(solve_by_divisors({0, 0, 1, 5, 5}));
}

TEST(SolveByDivisors, RejectsInvalidProblems) {
  EXPECT_THROW(solve_by_divisors({1, 2, 0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(solve_by_divisors({-2, 0, 0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(solve_by_divisors({2, 0, 0, 0, 1}), std::invalid_argument);
}

TEST(SolveBruteforce, Examples) {
  EXPECT_EQ(solve_bruteforce({8, 0, 0, 1, 5}), (std::pair<std::int64_t, std::int64_t>{1, 3}));
  EXPECT_EQ(solve_bruteforce({0, 0, 0, 3, 3}), (std::pair<std::int64_t, std::int64_t>{1, 1}));
  EXPECT_FALSE(solve_bruteforce({0, 0, 1, 5, 5}));
  EXPECT_THROW(solve_bruteforce({0, 0, 1, 100, 100}, 9999), CapExceeded);
}

TEST(PositiveDivisors, AscendingAndComplete) {
  EXPECT_EQ(positive_divisors(-36), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_EQ(positive_divisors(13), (std::vector<std::int64_t>{1, 13}));
  EXPECT_THROW(positive_divisors(0), std::invalid_argument);
}

TEST(GValue, Examples) {
  EXPECT_DOUBLE_EQ(g_value(0, 5).value, 5.0);
  EXPECT_DOUBLE_EQ(g_value(4, 4).value, 2.0);
  EXPECT_FALSE(g_value(2, 1).finite);
  EXPECT_TRUE(std::isinf(g_value(2, 1).value));
}

TEST(CompareG, Examples) {
  EXPECT_EQ(compare_g(3, 0, 5), std::strong_ordering::less);
  EXPECT_EQ(compare_g(8, 16, 10), std::strong_ordering::equal);
  EXPECT_EQ(compare_g(8, -16, 10), std::strong_ordering::less);
  EXPECT_EQ(compare_g(2, 2, 1), std::strong_ordering::greater);
}

TEST(CompareG, RejectsHypothesisViolations) {
  EXPECT_THROW(compare_g(4, 16, 10), std::invalid_argument);
  EXPECT_THROW(compare_g(5, 16, 0), std::invalid_argument);
}

TEST(CompareG, AgreesWithFloatingPoint) {
  std::mt19937_64 rng(testing_support::seed());
  std::uniform_int_distribution<std::int64_t> c1d(-2000, 2000), c2d(1, 200), xd(1, 300);
  int checked = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    const auto c1 = c1d(rng), c2 = c2d(rng), x = xd(rng);
    if (x * x <= std::llabs(c1)) continue;
    const auto g = g_value(c1, static_cast<double>(c2));
    const auto cmp = compare_g(x, c1, c2);
    if (!g.finite) {
      EXPECT_EQ(cmp, std::strong_ordering::greater);
    } else if (std::abs(static_cast<double>(x) - g.value) > 1e-9) {
      EXPECT_EQ(cmp == std::strong_ordering::less, static_cast<double>(x) < g.value)
          << x << " " << c1 << " " << c2;
    }
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(CompareG, ExactOnPerfectSquareDiscriminants) {
  for (std::int64_t r = 1; r <= 40; ++r)
    for (std::int64_t c2 = 1; c2 <= 40; ++c2) {
      if ((c2 * c2 - r * r) % 4 != 0) continue;
      const std::int64_t c1 = (c2 * c2 - r * r) / 4;
      if ((c2 + r) % 2 != 0) continue;
      const std::int64_t g = (c2 + r) / 2;
      if (g * g <= std::llabs(c1)) continue;
      EXPECT_EQ(compare_g(g, c1, c2), std::strong_ordering::equal);
      EXPECT_EQ(compare_g(g + 1, c1, c2), std::strong_ordering::greater);
      if ((g - 1) * (g - 1) > std::llabs(c1))
        EXPECT_EQ(compare_g(g - 1, c1, c2), std::strong_ordering::less);
    }
}

// x + c1/x >= c2  <=>  x >= g(c1, c2) for x > sqrt|c1|.
TEST(CompareG, ThresholdLawOnDivisors) {
  for (std::int64_t c = -600; c <= 600; ++c) {
    if (c == 0) continue;
    for (std::int64_t p = 1; p <= std::llabs(c); ++p) {
      if (c % p != 0 || p * p <= std::llabs(c)) continue;
      for (std::int64_t c2 = 1; c2 <= 80; c2 += 3) {
        const auto cmp = compare_g(p, c, c2);
        EXPECT_EQ(p + c / p >= c2, cmp != std::strong_ordering::less);
        EXPECT_EQ(p + c / p <= c2, cmp != std::strong_ordering::greater);
      }
    }
  }
}

TEST(DivisorMethod, MatchesBruteForceOnRandomProblems) {
  std::mt19937_64 rng(testing_support::seed());
  std::uniform_int_distribution<std::int64_t> cd(0, 50), c3d(-2000, 2000), bd(1, 40);
  for (int iter = 0; iter < 3000; ++iter) {
    BoxDioProblem p{cd(rng), 0, c3d(rng), bd(rng), bd(rng)};
    p.c2 = cd(rng);
    if ((p.c1 - p.c2) % 2 != 0) p.c2 = p.c2 == 50 ? 49 : p.c2 + 1;
    auto w = solve_by_divisors(p);
    auto b = solve_bruteforce(p);
    ASSERT_EQ(w.has_value(), b.has_value()) << p.c1 << " " << p.c2 << " " << p.c3;
    if (w) {
      EXPECT_TRUE(p.satisfied_by(w->x, w->y));
      EXPECT_EQ(w->p * w->q, c_star(p));
      if (c_star(p) != 0) EXPECT_GT(w->p * w->p, std::llabs(c_star(p)));
    }
  }
}

TEST(DivisorMethod, GFormAgreesWithIntegerForm) {
  std::mt19937_64 rng(testing_support::seed() + 1);
  std::uniform_int_distribution<std::int64_t> cd(0, 50), c3d(-2000, 2000), bd(1, 40);
  for (int iter = 0; iter < 2000; ++iter) {
    BoxDioProblem p{cd(rng), 0, c3d(rng), bd(rng), bd(rng)};
    p.c2 = p.c1 % 2 == 0 ? 2 * (cd(rng) / 2) : 2 * (cd(rng) / 2) + 1;
    for (auto q : divisor_candidates(p))
      EXPECT_EQ(divisor_conditions_hold(p, q), divisor_conditions_hold_g(p, q));
  }
}

TEST(LinearImage, MatchesEnumeratedImage) {
  std::mt19937_64 rng(testing_support::seed() + 2);
  std::uniform_int_distribution<std::int64_t> pos(1, 20), any(-20, 20);
  for (int iter = 0; iter < 200; ++iter) {
    const auto c1 = pos(rng), c2 = pos(rng), c3 = any(rng), c4 = any(rng);
    std::set<std::pair<std::int64_t, std::int64_t>> image;
    for (std::int64_t x = 1; x <= c1; ++x)
      for (std::int64_t y = 1; y <= c2; ++y) image.emplace(x - y + c3, x + y + c4);
    for (std::int64_t u = c3 - c2 - 2; u <= c3 + c1 + 2; ++u)
      for (std::int64_t v = c4 - 1; v <= c4 + c1 + c2 + 2; ++v)
        EXPECT_EQ(in_linear_image(u, v, c1, c2, c3, c4), image.count({u, v}) == 1);
  }
}
