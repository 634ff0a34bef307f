#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "checker/surface.hpp"

namespace checker {

/// Bipartite ribbon graph left after deleting red and yellow edges and blue
/// vertices. Edge e is the blue edge of white triangle e. Each vertex lists
/// its incident edges in rotation order.
struct Dessin {
  std::vector<std::vector<Point>> red_vertices;
  std::vector<std::vector<Point>> yellow_vertices;
  std::vector<std::size_t> edge_red;     ///< red endpoint of each edge
  std::vector<std::size_t> edge_yellow;  ///< yellow endpoint of each edge

  std::size_t edge_count() const noexcept { return edge_red.size(); }

  /// Faces of the embedding: orbits of the composite rotation.
  std::vector<std::vector<Point>> faces() const;
  /// Connected components as edge sets, ordered by smallest edge.
  std::vector<std::vector<Point>> components() const;
  /// V - E + F of the component containing `edge`.
  long euler_characteristic(const std::vector<Point>& component_edges) const;

  std::string to_dot(const std::string& name = "dessin") const;
};

Dessin to_dessin(const Triple& t);

}  // namespace checker
