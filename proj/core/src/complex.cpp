#include "checker/complex.hpp"

#include <string>

#include "checker/error.hpp"

namespace checker {

std::size_t CellComplex::add_surface(const Triple& t) {
  const std::size_t id = surface_offset_.size();
  const std::size_t tri0 = triangles_.size();
  const std::size_t edge0 = edge_parent_.size();
  const std::size_t n = t.n();
  surface_offset_.push_back(tri0);
  surface_size_.push_back(n);

  // Edge (white w, color c) has index edge0 + 3w + c.
  for (std::size_t e = 0; e < 3 * n; ++e) {
    edge_parent_.push_back(edge0 + e);
    edge_color_.push_back(static_cast<Color>(e % 3));
  }
  for (Point w = 0; w < n; ++w)
    triangles_.push_back({false, id, w, {edge0 + 3 * w, edge0 + 3 * w + 1, edge0 + 3 * w + 2}});
  for (Point b = 0; b < n; ++b) triangles_.push_back({true, id, b, {0, 0, 0}});
  for (Point w = 0; w < n; ++w)
    for (Color c : kColors) {
      const std::size_t ci = static_cast<std::size_t>(c);
      triangles_[tri0 + n + t[c](w)].edges[ci] = edge0 + 3 * w + ci;
    }
  return id;
}

std::size_t CellComplex::triangle_index(std::size_t surface, bool black, Point label) const {
  if (surface >= surface_offset_.size() || label >= surface_size_[surface])
    throw InvariantViolation("triangle " + std::to_string(label + 1) + " does not exist");
  return surface_offset_[surface] + (black ? surface_size_[surface] : 0) + label;
}

void CellComplex::remove_interior(std::size_t tri) { triangles_.at(tri).present = false; }

std::size_t CellComplex::find(std::size_t e) const {
  while (edge_parent_[e] != e) e = edge_parent_[e] = edge_parent_[edge_parent_[e]];
  return e;
}

void CellComplex::identify_boundaries(std::size_t a, std::size_t b) {
  const Triangle& ta = triangles_.at(a);
  const Triangle& tb = triangles_.at(b);
  if (ta.present || tb.present) throw InvariantViolation("only holes can be identified");
  for (std::size_t c = 0; c < 3; ++c) {
    const std::size_t ea = find(ta.edges[c]), eb = find(tb.edges[c]);
    if (edge_color_[ea] != edge_color_[eb]) throw InvariantViolation("edge colors disagree");
    edge_parent_[ea] = eb;
  }
}

Triple CellComplex::to_triple(
    const std::function<std::optional<Point>(const Triangle&)>& fixed_label) const {
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> white_side(edge_parent_.size(), kNone), black_side(edge_parent_.size(), kNone);
  std::size_t whites = 0, blacks = 0, fixed_whites = 0, fixed_blacks = 0;
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const Triangle& t = triangles_[i];
    if (!t.present) continue;
    (t.black ? blacks : whites)++;
    if (fixed_label(t)) (t.black ? fixed_blacks : fixed_whites)++;
    for (std::size_t c = 0; c < 3; ++c) {
      auto& side = t.black ? black_side[find(t.edges[c])] : white_side[find(t.edges[c])];
      if (side != kNone) throw InvariantViolation("an edge bounds two triangles of one color");
      side = i;
    }
  }
  if (whites != blacks) throw InvariantViolation("glued complex has unequal triangle counts");
  for (const Triangle& t : triangles_) {
    if (!t.present || !t.black) continue;
    for (std::size_t e : t.edges)
      if (white_side[find(e)] == kNone) throw InvariantViolation("an edge is missing its white side");
  }

  std::vector<Point> label(triangles_.size(), 0);
  std::vector<bool> taken_white(whites, false), taken_black(blacks, false);
  Point next_white = static_cast<Point>(fixed_whites), next_black = static_cast<Point>(fixed_blacks);
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const Triangle& t = triangles_[i];
    if (!t.present) continue;
    if (auto fixed = fixed_label(t)) {
      auto& taken = t.black ? taken_black : taken_white;
      const std::size_t limit = t.black ? fixed_blacks : fixed_whites;
      if (*fixed >= limit || taken[*fixed]) throw InvariantViolation("fixed labels are not 1..k");
      taken[*fixed] = true;
      label[i] = *fixed;
    } else {
      label[i] = t.black ? next_black++ : next_white++;
    }
  }

  std::array<std::vector<Point>, 3> images;
  for (auto& img : images) img.assign(whites, 0);
  for (std::size_t i = 0; i < triangles_.size(); ++i) {
    const Triangle& t = triangles_[i];
    if (!t.present || t.black) continue;
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t other = black_side[find(t.edges[c])];
      if (other == kNone) throw InvariantViolation("an edge is missing its black side");
      images[c][label[i]] = label[other];
    }
  }
  return Triple(Permutation(std::move(images[0])), Permutation(std::move(images[1])),
                Permutation(std::move(images[2])), whites);
}

}  // namespace checker
