#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "checker/surface.hpp"

namespace checker {

/// Result of canonical labeling.
struct CanonicalForm {
  Triple triple;
  /// Order of the group of label-preserving automorphisms of the surface.
  std::uint64_t automorphisms = 1;
};

/// Canonical representative of the double coset K[alpha] · t · K[beta].
///
/// Black triangles 0..alpha-1 and white triangles 0..beta-1 keep their labels;
/// all other labels are reassigned. Each connected component is labeled by a
/// breadth-first walk of its triangle adjacency from a root: a pinned triangle
/// when the component has one, otherwise every white triangle is tried and the
/// lexicographically smallest resulting code wins. Components are then
/// concatenated in code order. With `strip_double_triangles`, components that are
/// bare double triangles without labels are dropped.
CanonicalForm canonical_triple(const Triple& t, std::size_t alpha, std::size_t beta,
                               bool strip_double_triangles);

/// A double coset in K[alpha]\G/K[beta], stored as its canonical triple with
/// unlabeled double triangles removed. The first `alpha` black triangles and the
/// first `beta` white triangles carry labels.
class LabeledSurface {
 public:
  LabeledSurface() = default;

  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t beta() const noexcept { return beta_; }
  const Triple& triple() const noexcept { return triple_; }
  std::size_t n() const noexcept { return triple_.n(); }
  /// The stripped representative padded with double triangles to degree n.
  Triple embedded(std::size_t n) const;

  friend bool operator==(const LabeledSurface& a, const LabeledSurface& b) noexcept {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.triple_.n() == b.triple_.n() &&
           a.triple_ == b.triple_;
  }
  friend std::strong_ordering operator<=>(const LabeledSurface& a, const LabeledSurface& b) noexcept;

 private:
  friend LabeledSurface canonical_form(const Triple&, std::size_t, std::size_t);
  LabeledSurface(std::size_t alpha, std::size_t beta, Triple t)
      : alpha_(alpha), beta_(beta), triple_(std::move(t)) {}

  std::size_t alpha_ = 0;
  std::size_t beta_ = 0;
  Triple triple_;
};

/// Throws SchemaError if alpha or beta exceed t.n().
LabeledSurface canonical_form(const Triple& t, std::size_t alpha, std::size_t beta);

/// A label-free checker surface, double triangles included (an element of
/// the disjoint union of all Xi_n). n is the number of white triangles.
class CheckerSurface {
 public:
  CheckerSurface() = default;
  explicit CheckerSurface(const Triple& t);

  static CheckerSurface empty() { return CheckerSurface(); }
  static CheckerSurface double_triangles(std::size_t count);

  const Triple& triple() const noexcept { return triple_; }
  std::size_t n() const noexcept { return triple_.n(); }
  std::uint64_t automorphisms() const noexcept { return automorphisms_; }
  std::size_t double_triangle_count() const;

  friend bool operator==(const CheckerSurface& a, const CheckerSurface& b) noexcept {
    return a.triple_.n() == b.triple_.n() && a.triple_ == b.triple_;
  }
  friend std::strong_ordering operator<=>(const CheckerSurface& a, const CheckerSurface& b) noexcept {
    if (auto c = a.triple_.n() <=> b.triple_.n(); c != 0) return c;
    return a.triple_ <=> b.triple_;
  }

 private:
  Triple triple_;
  std::uint64_t automorphisms_ = 1;
};

CheckerSurface disjoint_union(const CheckerSurface& a, const CheckerSurface& b);

/// Disjoint union of two triples: b's points are shifted past a's.
Triple disjoint_union(const Triple& a, const Triple& b);

struct ComponentSummary {
  Component points;
  long chi;
  std::size_t genus;
  VertexCensus vertices;
};

/// Per-component topology of a triple, in component order.
std::vector<ComponentSummary> summarize(const Triple& t);

}  // namespace checker
