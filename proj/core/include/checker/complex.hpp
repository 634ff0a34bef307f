#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "checker/surface.hpp"

namespace checker {

/// Two-dimensional cell complex built from checker triangles with explicit
/// triangle/edge incidence. Supports removing triangle interiors and
/// identifying the boundaries of removed triangles color by color. Vertices
/// are not tracked; they are implied by the edge incidence (normalization).
class CellComplex {
 public:
  struct Triangle {
    bool black;
    std::size_t surface;
    Point label;
    std::array<std::size_t, 3> edges;  // indexed by color
    bool present = true;
  };

  /// Adds the 2n triangles and 3n edges of a completely labeled surface.
  /// Returns the surface id.
  std::size_t add_surface(const Triple& t);

  std::size_t triangle_index(std::size_t surface, bool black, Point label) const;
  const Triangle& triangle(std::size_t index) const { return triangles_.at(index); }
  std::size_t triangle_count() const noexcept { return triangles_.size(); }

  void remove_interior(std::size_t tri);
  /// Identifies the boundary edges of two removed triangles, color by color.
  void identify_boundaries(std::size_t a, std::size_t b);

  /// Present triangles on each side of every edge class. Throws
  /// InvariantViolation unless each edge bounds one white and one black triangle.
  ///
  /// `fixed_label` returns the label a triangle must keep, if any. Fixed white
  /// labels must be exactly 0..w-1 and fixed black labels 0..b-1; the other
  /// triangles are numbered consecutively after them in insertion order.
  Triple to_triple(const std::function<std::optional<Point>(const Triangle&)>& fixed_label) const;

 private:
  std::size_t find(std::size_t e) const;

  std::vector<Triangle> triangles_;
  std::vector<std::size_t> surface_offset_;
  std::vector<std::size_t> surface_size_;
  mutable std::vector<std::size_t> edge_parent_;
  std::vector<Color> edge_color_;
};

}  // namespace checker
