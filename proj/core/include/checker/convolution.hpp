#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "checker/canonical.hpp"
#include "checker/rational.hpp"
#include "checker/surface.hpp"

namespace checker {

/// Finitely supported function on G_n with exact rational values.
/// Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(std::size_t n = 0) : n_(n) {}

  static GroupAlgebraElement point_mass(const Triple& g, std::size_t n, const Rational& weight = 1);

  std::size_t n() const noexcept { return n_; }
  const std::map<Triple, Rational>& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  Rational coefficient(const Triple& g) const;
  Rational mass() const;

  /// Throws SchemaError if g does not live in G_n.
  void add(const Triple& g, const Rational& weight);
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& scalar);

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  std::map<Triple, Rational> terms_;
};

/// (f*g)(x) = sum_y f(y) g(y^-1 x). Requires f.n() == g.n().
GroupAlgebraElement convolve(const GroupAlgebraElement& f, const GroupAlgebraElement& g);

/// Uniform probability measure on the diagonal subgroup K_n[alpha]
/// (diagonal permutations fixing 0..alpha-1).
GroupAlgebraElement delta_subgroup(std::size_t alpha, std::size_t n);

/// Uniform probability measure on the double coset K_n[alpha] p(n) K_n[beta],
/// enumerated directly. Intended for small n.
GroupAlgebraElement delta_coset(const LabeledSurface& p, std::size_t n);

/// Sparse combination of double cosets with exact coefficients.
using CosetAlgebraElement = std::map<LabeledSurface, Rational>;

/// Structure constants of delta_{p(n)} * delta_{q(n)} in the basis of
/// K_n[alpha]-K_n[gamma] double cosets. Uses
///   delta_p * delta_q = (1/|K_n[beta]|) sum_{h in K_n[beta]} delta_{class(a0 h b0)}
/// for fixed representatives a0, b0, so only (n-beta)! canonicalizations are needed.
/// Throws SchemaError on mismatched labels or when n cannot hold p or q.
CosetAlgebraElement coset_decomposition(const LabeledSurface& p, const LabeledSurface& q,
                                        std::size_t n);

/// Same, but with caller-chosen representatives of p and q at degree n.
CosetAlgebraElement coset_decomposition(const Triple& a0, const Triple& b0, std::size_t alpha,
                                        std::size_t beta, std::size_t gamma, std::size_t n);

/// sigma_n: the coefficient of (p ⊛ q)(n) in delta_{p(n)} * delta_{q(n)}, for each n.
std::vector<Rational> sigma_series(const LabeledSurface& p, const LabeledSurface& q,
                                   const std::vector<std::size_t>& degrees);

}  // namespace checker
