#include "checker/surface.hpp"

#include <algorithm>
#include <numeric>

namespace checker {

const char* color_name(Color c) noexcept {
  switch (c) {
    case Color::blue: return "blue";
    case Color::red: return "red";
    case Color::yellow: return "yellow";
  }
  return "?";
}

Triple::Triple(Permutation blue, Permutation red, Permutation yellow, std::size_t n)
    : n_(std::max({n, blue.degree(), red.degree(), yellow.degree()})) {
  perms_[0] = blue.padded(n_);
  perms_[1] = red.padded(n_);
  perms_[2] = yellow.padded(n_);
}

Triple Triple::identity(std::size_t n) {
  const Permutation id = Permutation::identity(n);
  return Triple(id, id, id, n);
}

Triple Triple::diagonal(const Permutation& h, std::size_t n) { return Triple(h, h, h, n); }

Triple Triple::random(std::size_t n, std::mt19937_64& rng) {
  Permutation b = random_permutation(n, rng);
  Permutation r = random_permutation(n, rng);
  Permutation y = random_permutation(n, rng);
  return Triple(std::move(b), std::move(r), std::move(y), n);
}

Triple Triple::padded(std::size_t n) const {
  if (n <= n_) return *this;
  return Triple(perms_[0], perms_[1], perms_[2], n);
}

std::size_t Triple::hash() const noexcept {
  std::size_t h = perms_[0].hash();
  h = h * 31 + perms_[1].hash();
  h = h * 31 + perms_[2].hash();
  return h;
}

Triple operator*(const Triple& p, const Triple& q) {
  return Triple(p.blue() * q.blue(), p.red() * q.red(), p.yellow() * q.yellow(),
                std::max(p.n(), q.n()));
}

Triple reverse(const Triple& t) {
  return Triple(inverse(t.blue()), inverse(t.red()), inverse(t.yellow()), t.n());
}

// ---------------------------------------------------------------------------

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

CompletelyLabeledSurface::CompletelyLabeledSurface(std::size_t n, std::vector<SurfaceEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (edges_.size() != 3 * n_)
    throw InvariantViolation("a surface with " + std::to_string(2 * n_) + " triangles needs " +
                             std::to_string(3 * n_) + " edges");
  // Each triangle must carry exactly one edge of each color.
  std::vector<std::uint8_t> seen(6 * n_, 0);
  for (const SurfaceEdge& e : edges_) {
    if (e.white >= n_ || e.black >= n_) throw InvariantViolation("edge references a missing triangle");
    auto& w = seen[corner(false, e.white, e.color)];
    auto& b = seen[corner(true, e.black, e.color)];
    if (w || b) throw InvariantViolation("triangle has two edges of the same color");
    w = b = 1;
  }

  // Gluing the color-c edge identifies the corners of the two other colors.
  DisjointSets sets(6 * n_);
  for (const SurfaceEdge& e : edges_) {
    for (Color d : kColors) {
      if (d == e.color) continue;
      sets.unite(corner(false, e.white, d), corner(true, e.black, d));
    }
  }
  corner_vertex_.assign(6 * n_, 0);
  std::vector<std::size_t> root_index(6 * n_, SIZE_MAX);
  for (std::size_t k = 0; k < 6 * n_; ++k) {
    const std::size_t r = sets.find(k);
    if (root_index[r] == SIZE_MAX) {
      root_index[r] = vertices_.size();
      vertices_.push_back({static_cast<Color>(k % 3), 0});
    }
    corner_vertex_[k] = root_index[r];
    ++vertices_[root_index[r]].order;
  }
}

CompletelyLabeledSurface build_surface(const Triple& t) {
  std::vector<SurfaceEdge> edges;
  edges.reserve(3 * t.n());
  for (Point j = 0; j < t.n(); ++j)
    for (Color c : kColors) edges.push_back({c, j, t[c](j)});
  return CompletelyLabeledSurface(t.n(), std::move(edges));
}

Triple triple_of(const CompletelyLabeledSurface& s) {
  std::array<std::vector<Point>, 3> images;
  for (auto& v : images) v.assign(s.n(), 0);
  for (const SurfaceEdge& e : s.edges()) images[static_cast<std::size_t>(e.color)][e.white] = e.black;
  return Triple(Permutation(std::move(images[0])), Permutation(std::move(images[1])),
                Permutation(std::move(images[2])), s.n());
}

std::vector<Component> components(const Triple& t) {
  const std::size_t n = t.n();
  const Permutation yi = inverse(t.yellow());
  const Permutation a = yi * t.blue();
  const Permutation b = yi * t.red();
  std::vector<bool> seen(n, false);
  std::vector<Component> out;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Component comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (Point next : {a(comp[k]), b(comp[k])}) {
        if (!seen[next]) {
          seen[next] = true;
          comp.push_back(next);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Permutation vertex_permutation(const Triple& t, Color c) {
  switch (c) {
    case Color::blue: return inverse(t.yellow()) * t.red();
    case Color::red: return inverse(t.yellow()) * t.blue();
    case Color::yellow: return inverse(t.red()) * t.blue();
  }
  throw InvariantViolation("unknown color");
}

VertexCensus vertex_census(const Triple& t, const Component& comp) {
  VertexCensus census;
  for (Color c : kColors) {
    for (const Cycle& cyc : cycles(vertex_permutation(t, c), comp))
      census.orders[static_cast<std::size_t>(c)].push_back(2 * cyc.size());
  }
  return census;
}

VertexCensus vertex_census(const Triple& t) {
  std::vector<Point> all(t.n());
  std::iota(all.begin(), all.end(), Point{0});
  return vertex_census(t, all);
}

long euler_characteristic(const Triple& t, const Component& comp) {
  const auto comps = components(t);
  Component sorted = comp;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(comps.begin(), comps.end(), sorted) == comps.end())
    throw InvariantViolation("point set is not a component of the surface");
  const VertexCensus census = vertex_census(t, sorted);
  return static_cast<long>(census.total()) - static_cast<long>(sorted.size());
}

std::size_t genus(long chi) {
  if (chi > 2 || chi % 2 != 0)
    throw InvariantViolation("Euler characteristic " + std::to_string(chi) +
                             " is impossible for a closed oriented component");
  return static_cast<std::size_t>((2 - chi) / 2);
}

}  // namespace checker
