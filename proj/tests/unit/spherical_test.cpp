#include <gtest/gtest.h>

#include <random>

#include "checker/canonical.hpp"
#include "checker/error.hpp"
#include "checker/spherical.hpp"
#include "oracles.hpp"

using namespace checker;

namespace {

std::array<std::size_t, 3> random_dims(std::mt19937_64& rng) {
  return {1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
}

}  // namespace

TEST(Spherical, DoubleTriangleHasUnitValue) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 xi = Tensor3::random_unit(random_dims(rng), rng);
    EXPECT_NEAR(std::abs(spherical_assignment_sum(Triple::identity(1), xi) - Complex(1, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(spherical_oracle(Triple::identity(3), xi) - Complex(1, 0)), 0.0, 1e-12);
  }
}

TEST(Spherical, EmptySurfaceIsOne) {
  std::mt19937_64 rng(2);
  const Tensor3 xi = Tensor3::random_unit({2, 2, 2}, rng);
  EXPECT_EQ(spherical_assignment_sum(CheckerSurface::empty(), xi), Complex(1, 0));
}

TEST(Spherical, AgreesWithTensorPowerOnS2) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor3 xi = Tensor3::random_unit(random_dims(rng), rng);
    for (const auto& t : oracle::all_triples(2))
      EXPECT_NEAR(std::abs(spherical_assignment_sum(t, xi) - spherical_oracle(t, xi)), 0.0, 1e-10);
  }
}

TEST(Spherical, InvariantUnderDiagonalAction) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Tensor3 xi = Tensor3::random_unit({2, 2, 1 + rng() % 2}, rng);
    const Triple t = Triple::random(n, rng);
    const Triple moved = Triple::diagonal(random_permutation(n, rng), n) * t *
                         Triple::diagonal(random_permutation(n, rng), n);
    EXPECT_NEAR(std::abs(spherical_oracle(t, xi) - spherical_oracle(moved, xi)), 0.0, 1e-10);
  }
}

TEST(Spherical, MultiplicativeOverComponents) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Tensor3 xi = Tensor3::random_unit(random_dims(rng), rng);
    const CheckerSurface a(Triple::random(3, rng)), b(Triple::random(3, rng));
    const Complex lhs = spherical_assignment_sum(disjoint_union(a, b), xi);
    const Complex rhs = spherical_assignment_sum(a, xi) * spherical_assignment_sum(b, xi);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-10);
  }
}

TEST(Spherical, BudgetEnforced) {
  std::mt19937_64 rng(6);
  const Tensor3 xi = Tensor3::random_unit({3, 3, 3}, rng);
  EXPECT_THROW(spherical_oracle(Triple::random(8, rng), xi, 1000), BudgetExceeded);
  EXPECT_THROW(spherical_assignment_sum(Triple::random(8, rng), xi, 1000), BudgetExceeded);
}

TEST(Spherical, TensorValidation) {
  EXPECT_THROW(Tensor3({2, 2, 2}, std::vector<Complex>(7)), SchemaError);
  EXPECT_THROW(Tensor3({0, 2, 2}, {}), SchemaError);
  EXPECT_THROW(Tensor3({1, 1, 1}, {Complex(0, 0)}).normalized(), SchemaError);
}
