#include "checker/dessin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace checker {

namespace {

// Successor of each edge in the rotation around its vertex.
std::vector<Point> rotation(const std::vector<std::vector<Point>>& vertices, std::size_t edges) {
  std::vector<Point> next(edges);
  for (const auto& v : vertices)
    for (std::size_t k = 0; k < v.size(); ++k) next[v[k]] = v[(k + 1) % v.size()];
  return next;
}

}  // namespace

Dessin to_dessin(const Triple& t) {
  Dessin d;
  d.edge_red.assign(t.n(), 0);
  d.edge_yellow.assign(t.n(), 0);
  for (const Cycle& c : cycles(vertex_permutation(t, Color::red))) {
    for (Point e : c) d.edge_red[e] = d.red_vertices.size();
    d.red_vertices.push_back(c);
  }
  for (const Cycle& c : cycles(vertex_permutation(t, Color::yellow))) {
    for (Point e : c) d.edge_yellow[e] = d.yellow_vertices.size();
    d.yellow_vertices.push_back(c);
  }
  return d;
}

std::vector<std::vector<Point>> Dessin::faces() const {
  const std::size_t e = edge_count();
  const std::vector<Point> sigma = rotation(red_vertices, e);
  const std::vector<Point> tau = rotation(yellow_vertices, e);
  std::vector<Point> tau_inv(e);
  for (Point x = 0; x < e; ++x) tau_inv[tau[x]] = x;
  std::vector<Point> face_step(e);
  for (Point x = 0; x < e; ++x) face_step[x] = tau_inv[sigma[x]];
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(e, false);
  for (Point s = 0; s < e; ++s) {
    if (seen[s]) continue;
    std::vector<Point> f;
    for (Point x = s; !seen[x]; x = face_step[x]) {
      seen[x] = true;
      f.push_back(x);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::vector<Point>> Dessin::components() const {
  const std::size_t e = edge_count();
  std::vector<std::size_t> parent(e);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& verts : {std::cref(red_vertices), std::cref(yellow_vertices)})
    for (const auto& v : verts.get())
      for (Point x : v) parent[find(x)] = find(v.front());
  std::vector<std::vector<Point>> out;
  std::vector<std::size_t> slot(e, SIZE_MAX);
  for (Point x = 0; x < e; ++x) {
    const std::size_t r = find(x);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

long Dessin::euler_characteristic(const std::vector<Point>& component_edges) const {
  std::vector<bool> in(edge_count(), false);
  for (Point x : component_edges) in[x] = true;
  long v = 0, f = 0;
  for (const auto& r : red_vertices) v += in[r.front()] ? 1 : 0;
  for (const auto& y : yellow_vertices) v += in[y.front()] ? 1 : 0;
  for (const auto& face : faces()) f += in[face.front()] ? 1 : 0;
  return v - static_cast<long>(component_edges.size()) + f;
}

std::string Dessin::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < red_vertices.size(); ++i) {
    os << "  r" << i << " [shape=box, color=red, label=\"r" << i + 1 << "\\n(";
    for (std::size_t k = 0; k < red_vertices[i].size(); ++k)
      os << (k ? " " : "") << red_vertices[i][k] + 1;
    os << ")\"];\n";
  }
  for (std::size_t i = 0; i < yellow_vertices.size(); ++i) {
    os << "  y" << i << " [shape=circle, color=gold, label=\"y" << i + 1 << "\\n(";
    for (std::size_t k = 0; k < yellow_vertices[i].size(); ++k)
      os << (k ? " " : "") << yellow_vertices[i][k] + 1;
    os << ")\"];\n";
  }
  for (Point e = 0; e < edge_count(); ++e)
    os << "  r" << edge_red[e] << " -- y" << edge_yellow[e] << " [color=blue, label=\"" << e + 1
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace checker
