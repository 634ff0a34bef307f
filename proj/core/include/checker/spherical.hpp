#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "checker/canonical.hpp"
#include "checker/surface.hpp"

namespace checker {

using Complex = std::complex<double>;

/// Default cap on multiply-adds for either spherical evaluation.
inline constexpr std::uint64_t kDefaultSphericalBudget = 100'000'000;

/// A vector of H_blue ⊗ H_red ⊗ H_yellow in the product basis, row-major in (i, j, k).
class Tensor3 {
 public:
  Tensor3(std::array<std::size_t, 3> dims, std::vector<Complex> entries);

  /// Gaussian entries, then normalized to unit Frobenius norm.
  static Tensor3 random_unit(std::array<std::size_t, 3> dims, std::mt19937_64& rng);

  const std::array<std::size_t, 3>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Complex>& entries() const noexcept { return entries_; }
  const Complex& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * dims_[1] + j) * dims_[2] + k];
  }
  double norm() const;
  Tensor3 normalized() const;

 private:
  std::array<std::size_t, 3> dims_;
  std::vector<Complex> entries_;
};

/// Sum over all assignments of basis indices to edges of the product of
/// xi over white triangles and conj(xi) over black triangles. Evaluated
/// component by component; throws BudgetExceeded past `budget` multiply-adds.
Complex spherical_assignment_sum(const Triple& t, const Tensor3& xi,
                                 std::uint64_t budget = kDefaultSphericalBudget);
Complex spherical_assignment_sum(const CheckerSurface& s, const Tensor3& xi,
                                 std::uint64_t budget = kDefaultSphericalBudget);

/// <rho(t) v, v> with v = xi^{⊗n}, computed on the dense tensor power: the
/// blue component of t permutes the blue tensor slots, and likewise for red
/// and yellow. Needs (d_b d_r d_y)^n entries; throws BudgetExceeded beyond `budget`.
Complex spherical_oracle(const Triple& t, const Tensor3& xi,
                         std::uint64_t budget = kDefaultSphericalBudget);

}  // namespace checker
