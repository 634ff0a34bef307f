#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "checker/perm.hpp"

namespace checker {

enum class Color : std::uint8_t { blue = 0, red = 1, yellow = 2 };
inline constexpr std::array<Color, 3> kColors{Color::blue, Color::red, Color::yellow};
const char* color_name(Color c) noexcept;

/// An element (blue, red, yellow) of G_n = S_n x S_n x S_n.
///
/// The white triangle j is glued to the black triangle p^c(j) along its
/// edge of color c. The ambient degree n is the number of white (and black)
/// triangles; points of a component beyond the permutations' own degrees are
/// double triangles.
class Triple {
 public:
  Triple() = default;
  Triple(Permutation blue, Permutation red, Permutation yellow, std::size_t n = 0);

  static Triple identity(std::size_t n);
  /// (h, h, h), the diagonal image of h.
  static Triple diagonal(const Permutation& h, std::size_t n = 0);
  static Triple random(std::size_t n, std::mt19937_64& rng);

  std::size_t n() const noexcept { return n_; }
  const Permutation& operator[](Color c) const noexcept {
    return perms_[static_cast<std::size_t>(c)];
  }
  const Permutation& blue() const noexcept { return perms_[0]; }
  const Permutation& red() const noexcept { return perms_[1]; }
  const Permutation& yellow() const noexcept { return perms_[2]; }

  Triple padded(std::size_t n) const;

  /// Componentwise equality after trimming fixed tails (the ambient n is not compared).
  friend bool operator==(const Triple& a, const Triple& b) noexcept {
    return a.perms_ == b.perms_;
  }
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) noexcept {
    return a.perms_ <=> b.perms_;
  }
  std::size_t hash() const noexcept;

 private:
  std::array<Permutation, 3> perms_;
  std::size_t n_ = 0;
};

/// Componentwise product, the group law of G_n.
Triple operator*(const Triple& p, const Triple& q);
/// Componentwise inverse: swaps black and white triangles and reverses orientation.
Triple reverse(const Triple& t);

// ---------------------------------------------------------------------------
// Cell structure

struct SurfaceEdge {
  Color color;
  Point white;  ///< label of the white triangle on one side
  Point black;  ///< label of the black triangle on the other side
};

struct SurfaceVertex {
  Color color;
  std::size_t order;  ///< number of incident triangles (always even)
};

/// Explicit 2-cell structure of a completely labeled checker surface: 2n
/// triangles, 3n colored edges, and vertices found by identifying triangle
/// corners across shared edges.
class CompletelyLabeledSurface {
 public:
  /// Validates incidence: each triangle must have exactly one edge of each color.
  CompletelyLabeledSurface(std::size_t n, std::vector<SurfaceEdge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t triangle_count() const noexcept { return 2 * n_; }
  const std::vector<SurfaceEdge>& edges() const noexcept { return edges_; }
  const std::vector<SurfaceVertex>& vertices() const noexcept { return vertices_; }
  /// Vertex index of each corner; corner (white w, color c) is the corner opposite
  /// the edge of color c, i.e. the vertex of color c.
  std::size_t white_corner_vertex(Point w, Color c) const { return corner_vertex_[corner(false, w, c)]; }
  std::size_t black_corner_vertex(Point b, Color c) const { return corner_vertex_[corner(true, b, c)]; }

 private:
  std::size_t corner(bool black, Point t, Color c) const noexcept {
    return (black ? 3 * n_ : 0) + 3 * t + static_cast<std::size_t>(c);
  }

  std::size_t n_;
  std::vector<SurfaceEdge> edges_;
  std::vector<SurfaceVertex> vertices_;
  std::vector<std::size_t> corner_vertex_;
};

CompletelyLabeledSurface build_surface(const Triple& t);
/// Reads p^c(white) = black off every edge. Throws InvariantViolation on malformed incidence.
Triple triple_of(const CompletelyLabeledSurface& s);

using Component = std::vector<Point>;

/// Orbits of <(p^y)^-1 p^b, (p^y)^-1 p^r> on white labels, sorted, ordered by minimum.
std::vector<Component> components(const Triple& t);

/// Vertex permutation whose cycles are the vertices of color `c`:
/// blue <-> (p^y)^-1 p^r, red <-> (p^y)^-1 p^b, yellow <-> (p^r)^-1 p^b.
Permutation vertex_permutation(const Triple& t, Color c);

struct VertexCensus {
  /// orders[c] lists the orders (2 x cycle length) of the vertices of color c.
  std::array<std::vector<std::size_t>, 3> orders;
  std::size_t count(Color c) const noexcept { return orders[static_cast<std::size_t>(c)].size(); }
  std::size_t total() const noexcept { return orders[0].size() + orders[1].size() + orders[2].size(); }
};

VertexCensus vertex_census(const Triple& t);
VertexCensus vertex_census(const Triple& t, const Component& comp);

/// chi = -#comp + cycles of the three vertex permutations on comp.
/// Throws InvariantViolation if `comp` is not a component of `t`.
long euler_characteristic(const Triple& t, const Component& comp);

/// g = (2 - chi) / 2. Throws InvariantViolation for odd chi or chi > 2.
std::size_t genus(long chi);

}  // namespace checker

template <>
struct std::hash<checker::Triple> {
  std::size_t operator()(const checker::Triple& t) const noexcept { return t.hash(); }
};
