#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "checker/error.hpp"

namespace checker {

/// Points are stored 0-based; every textual form (JSON, cycle strings) is 1-based.
using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// A finitely supported permutation of the positive integers, stored in
/// one-line notation on {0, ..., degree-1}. Points at or beyond the degree are
/// fixed. Equality, ordering and hashing ignore trailing fixed points, so the
/// same element of S_infinity compares equal at every ambient degree.
class Permutation {
 public:
  Permutation() = default;

  /// Takes 0-based images; throws SchemaError unless they form a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  static Permutation from_one_line(std::span<const std::int64_t> one_based);
  /// Parses "(1 2 3)(4 5)". The degree is the larger of `degree` and the
  /// largest point mentioned. "()" and "" denote the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept {
    return x < images_.size() ? images_[x] : x;
  }
  std::span<const Point> images() const noexcept { return images_; }

  /// Smallest degree that still contains every moved point.
  std::size_t support_degree() const noexcept;
  bool is_identity() const noexcept { return support_degree() == 0; }

  Permutation padded(std::size_t degree) const;

  std::vector<std::int64_t> one_line() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::vector<Point> images_;
};

/// (p∘q)(x) = p(q(x)); degree = max(deg p, deg q).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}
Permutation inverse(const Permutation& p);

/// Disjoint cycles of `p` covering `carrier`, each starting at its minimum,
/// ordered by minimum. Throws InvariantViolation if carrier is not p-invariant.
std::vector<Cycle> cycles(const Permutation& p, std::span<const Point> carrier);
std::vector<Cycle> cycles(const Permutation& p);

std::size_t cycle_count(const Permutation& p, std::span<const Point> carrier);

/// Uniform element of S_degree.
Permutation random_permutation(std::size_t degree, std::mt19937_64& rng);

/// Uniform element of S_degree fixing 0..fixed-1.
Permutation random_permutation_fixing(std::size_t degree, std::size_t fixed,
                                      std::mt19937_64& rng);

}  // namespace checker

template <>
struct std::hash<checker::Permutation> {
  std::size_t operator()(const checker::Permutation& p) const noexcept {
    return p.hash();
  }
};
