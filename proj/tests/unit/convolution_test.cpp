#include <gtest/gtest.h>

#include <random>

#include "checker/convolution.hpp"
#include "checker/cosets.hpp"
#include "checker/error.hpp"
#include "oracles.hpp"

using namespace checker;

namespace {

Triple parse(const char* b, const char* r, const char* y, std::size_t n) {
  return Triple(Permutation::from_cycles(b, n), Permutation::from_cycles(r, n),
                Permutation::from_cycles(y, n), n);
}

GroupAlgebraElement random_sparse(std::size_t n, std::size_t terms, std::mt19937_64& rng) {
  GroupAlgebraElement f(n);
  for (std::size_t i = 0; i < terms; ++i)
    f.add(Triple::random(n, rng), Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4)));
  return f;
}

// sigma_n for p = q = blue transposition by classifying (1 2)(h(1) h(2)) directly.
struct TranspositionOracle {
  Rational two_cycles, three_cycle, empty;
};

TranspositionOracle transposition_oracle(std::size_t n) {
  TranspositionOracle out{0, 0, 0};
  const auto perms = oracle::all_permutations(n);
  const Rational w = Rational(1) / factorial(n);
  for (const auto& h : perms) {
    const Point a = h(0), b = h(1);
    const std::size_t overlap = (a < 2) + (b < 2);
    if (overlap == 0) out.two_cycles += w;
    else if (overlap == 1) out.three_cycle += w;
    else out.empty += w;
  }
  return out;
}

}  // namespace

TEST(GroupAlgebra, SubgroupMeasures) {
  const auto full = delta_subgroup(3, 3);
  EXPECT_EQ(full, GroupAlgebraElement::point_mass(Triple::identity(3), 3));
  const auto k2 = delta_subgroup(0, 2);
  EXPECT_EQ(k2.support_size(), 2u);
  EXPECT_EQ(k2.coefficient(Triple::identity(2)), Rational(1, 2));
  EXPECT_EQ(k2.coefficient(parse("(1 2)", "(1 2)", "(1 2)", 2)), Rational(1, 2));
  for (std::size_t a = 0; a <= 3; ++a) EXPECT_EQ(convolve(delta_subgroup(a, 3), delta_subgroup(a, 3)), delta_subgroup(a, 3));
}

TEST(GroupAlgebra, PointMassesMultiply) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Triple a = Triple::random(4, rng), b = Triple::random(4, rng);
    EXPECT_EQ(convolve(GroupAlgebraElement::point_mass(a, 4), GroupAlgebraElement::point_mass(b, 4)),
              GroupAlgebraElement::point_mass(a * b, 4));
  }
}

TEST(GroupAlgebra, MassIsMultiplicative) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_sparse(4, 6, rng), g = random_sparse(4, 6, rng);
    const auto id = GroupAlgebraElement::point_mass(Triple::identity(4), 4);
    EXPECT_EQ(convolve(f, g).mass(), f.mass() * g.mass());
    EXPECT_EQ(convolve(f, id), f);
  }
}

TEST(GroupAlgebra, MatchesDefinitionAndAssociates) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_sparse(2, 4, rng), g = random_sparse(2, 4, rng), h = random_sparse(2, 3, rng);
    EXPECT_EQ(convolve(f, g), oracle::naive_convolve(f, g));
    EXPECT_EQ(convolve(convolve(f, g), h), convolve(f, convolve(g, h)));
  }
}

TEST(GroupAlgebra, RejectsForeignElements) {
  GroupAlgebraElement f(2);
  EXPECT_THROW(f.add(parse("(1 3)", "", "", 3), 1), SchemaError);
  EXPECT_NO_THROW(f.add(parse("(1 2)", "", "", 3), 1));
}

TEST(Cosets, DeltaCosetIsSandwich) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 3, alpha = rng() % 3, beta = rng() % 3;
    const auto p = canonical_form(Triple::random(n, rng), std::min(alpha, n), std::min(beta, n));
    const auto a0 = GroupAlgebraElement::point_mass(p.embedded(n), n);
    const auto sandwich = convolve(convolve(delta_subgroup(p.alpha(), n), a0), delta_subgroup(p.beta(), n));
    EXPECT_EQ(delta_coset(p, n), sandwich);
  }
}

TEST(Cosets, DecompositionMatchesFullConvolution) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3, alpha = rng() % 2, beta = rng() % 2, gamma = rng() % 2;
    const auto p = canonical_form(Triple::random(n, rng), alpha, beta);
    const auto q = canonical_form(Triple::random(n, rng), beta, gamma);
    const auto full = convolve(delta_coset(p, n), delta_coset(q, n));
    GroupAlgebraElement rebuilt(n);
    for (const auto& [r, c] : coset_decomposition(p, q, n)) {
      auto piece = delta_coset(r, n);
      piece *= c;
      rebuilt += piece;
    }
    EXPECT_EQ(full, rebuilt);
  }
}

TEST(Cosets, DecompositionIsProbability) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5, alpha = rng() % 3, beta = rng() % 3, gamma = rng() % 3;
    const auto p = canonical_form(Triple::random(n, rng), alpha, beta);
    const auto q = canonical_form(Triple::random(n, rng), beta, gamma);
    Rational total = 0;
    for (const auto& [r, c] : coset_decomposition(p, q, n)) {
      EXPECT_GT(c, 0);
      total += c;
    }
    EXPECT_EQ(total, 1);
  }
}

TEST(Cosets, DecompositionIgnoresRepresentatives) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 4, alpha = rng() % 2, beta = rng() % 3, gamma = rng() % 2;
    const Triple a = Triple::random(n, rng), b = Triple::random(n, rng);
    const Triple a2 = Triple::diagonal(random_permutation_fixing(n, alpha, rng), n) * a *
                      Triple::diagonal(random_permutation_fixing(n, beta, rng), n);
    const Triple b2 = Triple::diagonal(random_permutation_fixing(n, beta, rng), n) * b *
                      Triple::diagonal(random_permutation_fixing(n, gamma, rng), n);
    EXPECT_EQ(coset_decomposition(a, b, alpha, beta, gamma, n), coset_decomposition(a2, b2, alpha, beta, gamma, n));
  }
}

TEST(Cosets, TranspositionCoefficients) {
  const auto p = canonical_form(parse("(1 2)", "", "", 2), 0, 0);
  const auto two = canonical_form(parse("(1 2)(3 4)", "", "", 4), 0, 0);
  const auto three = canonical_form(parse("(1 2 3)", "", "", 3), 0, 0);
  const auto empty = canonical_form(Triple::identity(0), 0, 0);
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto d = coset_decomposition(p, p, n);
    const auto o = transposition_oracle(n);
    const Rational nn(static_cast<long>(n));
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d.at(two), o.two_cycles);
    EXPECT_EQ(d.at(three), o.three_cycle);
    EXPECT_EQ(d.at(empty), o.empty);
    EXPECT_EQ(o.two_cycles, (nn - 2) * (nn - 3) / (nn * (nn - 1)));
    EXPECT_EQ(o.three_cycle, 4 * (nn - 2) / (nn * (nn - 1)));
    EXPECT_EQ(o.empty, 2 / (nn * (nn - 1)));
  }
  EXPECT_EQ(sigma_series(p, p, {4, 5}), (std::vector<Rational>{Rational(1, 6), Rational(3, 10)}));
}

TEST(Cosets, EmptySurfaceIsUnit) {
  std::mt19937_64 rng(8);
  const auto empty = canonical_form(Triple::identity(0), 0, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = canonical_form(Triple::random(3, rng), 0, 0);
    for (const auto& s : sigma_series(p, empty, {3, 4, 5})) EXPECT_EQ(s, 1);
  }
}

TEST(Cosets, RemainderShrinks) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = canonical_form(Triple::random(2, rng), 0, 1);
    const auto q = canonical_form(Triple::random(2, rng), 1, 0);
    const auto s = sigma_series(p, q, {4, 5, 6, 7});
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LE(1 - s[i], 1 - s[i - 1]);
  }
}
