#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "checker/canonical.hpp"
#include "checker/convolution.hpp"
#include "checker/rational.hpp"

namespace checker {

inline constexpr std::uint64_t kDefaultMaxTerms = 10'000'000;

/// Element of the filtered algebra spanned by u_p, p ranging over all finite
/// checker surfaces (double triangles included). Zero coefficients are never stored.
class IKElement {
 public:
  IKElement() = default;
  static IKElement basis(const CheckerSurface& p, const Rational& coefficient = 1);

  const std::map<CheckerSurface, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const CheckerSurface& p) const;
  /// Largest number of triangle pairs among the terms (0 for the zero element).
  std::size_t degree() const;
  /// Terms with exactly `pairs` triangle pairs.
  IKElement homogeneous_part(std::size_t pairs) const;

  void add(const CheckerSurface& p, const Rational& coefficient);
  IKElement& operator+=(const IKElement& other);
  IKElement& operator-=(const IKElement& other);
  IKElement& operator*=(const Rational& scalar);
  friend IKElement operator+(IKElement a, const IKElement& b) { return a += b; }
  friend IKElement operator-(IKElement a, const IKElement& b) { return a -= b; }
  friend IKElement operator*(const Rational& s, IKElement a) { return a *= s; }

  friend bool operator==(const IKElement& a, const IKElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<CheckerSurface, Rational> terms_;
};

/// Partial bijection from the white triangles of p to the black triangles of
/// q: entry w is the black triangle of q glued to white w of p, if any.
using PartialBijection = std::vector<std::optional<Point>>;

/// Removes the interiors of white w of p and black s(w) of q for each w in the
/// domain and identifies their boundaries by color. Result whites are q's
/// whites followed by p's unmatched whites; result blacks are p's blacks
/// followed by q's unmatched blacks. Throws SchemaError if s is not injective.
Triple glue(const Triple& p, const Triple& q, const PartialBijection& s);

/// Number of partial bijections between sets of sizes a and b: sum_k k! C(a,k) C(b,k).
std::uint64_t partial_bijection_count(std::size_t a, std::size_t b);

/// u_p ∘ u_q = sum over all partial bijections s of u_{glue(p, q, s)}.
/// Throws BudgetExceeded when the number of bijections exceeds `max_terms`.
IKElement ik_product(const CheckerSurface& p, const CheckerSurface& q,
                     std::uint64_t max_terms = kDefaultMaxTerms);
IKElement ik_product(const IKElement& x, const IKElement& y, std::uint64_t max_terms = kDefaultMaxTerms);

/// Product of the associated graded algebra on basis elements: disjoint union.
CheckerSurface graded_product(const CheckerSurface& p, const CheckerSurface& q);
IKElement graded_product(const IKElement& x, const IKElement& y);

/// Single-triangle gluings of p onto q minus those of q onto p: the image of
/// the commutator in the top graded piece.
IKElement poisson_bracket(const CheckerSurface& p, const CheckerSurface& q);
/// Bilinear extension; terms of x and y are treated as homogeneous by pair count.
IKElement poisson_bracket(const IKElement& x, const IKElement& y);

/// Multiplicity attached to the class sum of p(m):
/// |Aut(p)| · C(m - k + f, f) with k pairs and f double-triangle components.
/// Equals the number of injections of p's points into {1..m} producing each
/// element of the class. Throws SchemaError if m < k.
Rational lift_coefficient(const CheckerSurface& p, std::size_t m);

/// Image of u_p in C[S_m x S_m], pairs (g1, g2) stored as triples (g1, g2, id):
/// lift_coefficient(p, m) times the class sum of p padded to m pairs.
/// Throws SchemaError if m < k.
GroupAlgebraElement lift(const CheckerSurface& p, std::size_t m);

/// Linear map to C[S_n x S_n]: u_p -> lift(p, n), or 0 when p has more than n pairs.
GroupAlgebraElement project(const IKElement& x, std::size_t n);

/// Elements (b y^-1, r y^-1, id) of the diagonal-conjugacy class of t.
std::vector<Triple> pair_class(const Triple& t);

}  // namespace checker
