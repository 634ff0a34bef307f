#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "checker/error.hpp"
#include "checker/perm.hpp"
#include "checker/rational.hpp"

using namespace checker;

TEST(Permutation, CycleStringRoundTrip) {
  const auto p = Permutation::from_cycles("(1 3 2)(4 5)");
  EXPECT_EQ(p.degree(), 5u);
  EXPECT_EQ(p(0), 2u);
  EXPECT_EQ(p(2), 1u);
  EXPECT_EQ(p(1), 0u);
  EXPECT_EQ(p.to_cycle_string(), "(1 3 2)(4 5)");
  EXPECT_EQ(Permutation::from_cycles(p.to_cycle_string()), p);
}

TEST(Permutation, IdentitySpellings) {
  EXPECT_TRUE(Permutation::from_cycles("").is_identity());
  EXPECT_TRUE(Permutation::from_cycles("()").is_identity());
  EXPECT_EQ(Permutation::from_cycles("()", 4).degree(), 4u);
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
}

TEST(Permutation, EqualityIgnoresFixedTail) {
  const auto p = Permutation::from_cycles("(1 2)");
  EXPECT_EQ(p, p.padded(7));
  EXPECT_EQ(std::hash<Permutation>{}(p), std::hash<Permutation>{}(p.padded(7)));
  EXPECT_EQ(p.padded(7).support_degree(), 2u);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0}), SchemaError);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 2}), SchemaError);
  const std::vector<std::int64_t> zero_based{0, 1};
  EXPECT_THROW(Permutation::from_one_line(zero_based), SchemaError);
  EXPECT_THROW(Permutation::from_cycles("(1 2"), SchemaError);
  EXPECT_THROW(Permutation::from_cycles("(1 2)(2 3)"), SchemaError);
  EXPECT_THROW(Permutation::from_cycles("(0 1)"), SchemaError);
}

TEST(Permutation, ComposeActsRightToLeft) {
  const auto p = Permutation::from_cycles("(1 2)");
  const auto q = Permutation::from_cycles("(2 3)");
  // p(q(2)) = p(3) = 3, written 0-based.
  EXPECT_EQ((p * q)(1), 2u);
  EXPECT_EQ(p * q, Permutation::from_cycles("(1 2 3)"));
}

TEST(Permutation, GroupLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_permutation(7, rng), b = random_permutation(5, rng), c = random_permutation(6, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * inverse(a)).is_identity());
    EXPECT_EQ(inverse(a * b), inverse(b) * inverse(a));
  }
}

TEST(Permutation, CyclesCoverCarrier) {
  const auto p = Permutation::from_cycles("(1 4)(2 5 3)", 6);
  const auto cs = cycles(p);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], (Cycle{0, 3}));
  EXPECT_EQ(cs[1], (Cycle{1, 4, 2}));
  EXPECT_EQ(cs[2], (Cycle{5}));
  const std::vector<Point> carrier{1, 2, 4};
  EXPECT_EQ(cycle_count(p, carrier), 1u);
  const std::vector<Point> broken{0, 1};
  EXPECT_THROW(cycles(p, broken), InvariantViolation);
}

TEST(Permutation, RandomFixingKeepsPrefix) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_permutation_fixing(8, 3, rng);
    for (Point x = 0; x < 3; ++x) EXPECT_EQ(p(x), x);
  }
}

TEST(Rational, Formatting) {
  EXPECT_EQ(to_string(Rational(3, 10)), "3/10");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), SchemaError);
  EXPECT_THROW(parse_rational("x"), SchemaError);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(falling_factorial(6, 2), 30);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(2, 6), 0);
}
