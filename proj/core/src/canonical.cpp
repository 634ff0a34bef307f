#include "checker/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace checker {

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

// Adjacency of the bipartite triangle graph: white w meets black fwd[c][w]
// across its edge of color c.
struct TriangleGraph {
  explicit TriangleGraph(const Triple& t) : n(t.n()) {
    for (std::size_t c = 0; c < 3; ++c) {
      fwd[c].resize(n);
      inv[c].resize(n);
      const Permutation& p = t[static_cast<Color>(c)];
      for (Point w = 0; w < n; ++w) {
        fwd[c][w] = p(w);
        inv[c][p(w)] = w;
      }
    }
  }
  std::size_t n;
  std::array<std::vector<Point>, 3> fwd;
  std::array<std::vector<Point>, 3> inv;
};

struct Walk {
  std::vector<Point> whites;  // white triangles in discovery order
  std::vector<Point> blacks;
  std::vector<std::uint32_t> code;
};

class Labeler {
 public:
  Labeler(const TriangleGraph& g, std::size_t alpha, std::size_t beta)
      : g_(g), alpha_(alpha), beta_(beta), local_white_(g.n, kUnset), local_black_(g.n, kUnset) {}

  // Breadth-first walk from a root triangle; colors are tried in order.
  void walk(bool root_black, Point root, Walk& out) {
    out.whites.clear();
    out.blacks.clear();
    (root_black ? out.blacks : out.whites).push_back(root);
    (root_black ? local_black_[root] : local_white_[root]) = 0;
    queue_.clear();
    queue_.push_back({root_black, root});
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto [black, tri] = queue_[head];
      for (std::size_t c = 0; c < 3; ++c) {
        if (black) {
          const Point w = g_.inv[c][tri];
          if (local_white_[w] == kUnset) {
            local_white_[w] = static_cast<std::uint32_t>(out.whites.size());
            out.whites.push_back(w);
            queue_.push_back({false, w});
          }
        } else {
          const Point b = g_.fwd[c][tri];
          if (local_black_[b] == kUnset) {
            local_black_[b] = static_cast<std::uint32_t>(out.blacks.size());
            out.blacks.push_back(b);
            queue_.push_back({true, b});
          }
        }
      }
    }

    out.code.clear();
    out.code.reserve(2 + 4 * out.whites.size() + out.blacks.size());
    out.code.push_back(static_cast<std::uint32_t>(out.whites.size()));
    out.code.push_back(root_black ? 1 : 0);
    for (Point w : out.whites) {
      for (std::size_t c = 0; c < 3; ++c) out.code.push_back(local_black_[g_.fwd[c][w]]);
      out.code.push_back(w < beta_ ? w + 1 : 0);
    }
    for (Point b : out.blacks) out.code.push_back(b < alpha_ ? b + 1 : 0);

    for (Point w : out.whites) local_white_[w] = kUnset;
    for (Point b : out.blacks) local_black_[b] = kUnset;
  }

 private:
  const TriangleGraph& g_;
  std::size_t alpha_, beta_;
  std::vector<std::uint32_t> local_white_, local_black_;
  std::vector<std::pair<bool, Point>> queue_;
};

struct ComponentCode {
  bool pinned;
  std::vector<Point> whites;
  std::vector<Point> blacks;
  std::vector<std::uint32_t> code;
  std::uint64_t symmetries = 1;  // roots reproducing the minimal code
};

}  // namespace

CanonicalForm canonical_triple(const Triple& t, std::size_t alpha, std::size_t beta,
                               bool strip_double_triangles) {
  const std::size_t n = t.n();
  if (alpha > n || beta > n)
    throw SchemaError("label counts (" + std::to_string(alpha) + ", " + std::to_string(beta) +
                      ") exceed the degree " + std::to_string(n));
  const TriangleGraph g(t);
  Labeler labeler(g, alpha, beta);

  // Component membership of white triangles.
  std::vector<std::uint32_t> comp_of(n, kUnset);
  std::vector<ComponentCode> comps;
  Walk walk;
  for (Point start = 0; start < n; ++start) {
    if (comp_of[start] != kUnset) continue;
    labeler.walk(false, start, walk);
    for (Point w : walk.whites) comp_of[w] = static_cast<std::uint32_t>(comps.size());

    ComponentCode cc;
    const Point min_white = *std::min_element(walk.whites.begin(), walk.whites.end());
    const Point min_black = *std::min_element(walk.blacks.begin(), walk.blacks.end());
    cc.pinned = min_white < beta || min_black < alpha;
    if (cc.pinned) {
      if (min_white < beta)
        labeler.walk(false, min_white, walk);
      else
        labeler.walk(true, min_black, walk);
      cc.whites = walk.whites;
      cc.blacks = walk.blacks;
      cc.code = walk.code;
    } else {
      const std::vector<Point> members = walk.whites;
      bool first = true;
      for (Point root : members) {
        labeler.walk(false, root, walk);
        if (first || walk.code < cc.code) {
          cc.whites = walk.whites;
          cc.blacks = walk.blacks;
          cc.code = walk.code;
          cc.symmetries = 1;
          first = false;
        } else if (walk.code == cc.code) {
          ++cc.symmetries;
        }
      }
    }
    if (strip_double_triangles && !cc.pinned && cc.whites.size() == 1) continue;
    comps.push_back(std::move(cc));
  }

  std::sort(comps.begin(), comps.end(),
            [](const ComponentCode& a, const ComponentCode& b) { return a.code < b.code; });

  std::size_t kept = 0;
  for (const auto& cc : comps) kept += cc.whites.size();

  std::vector<Point> new_white(n, kUnset), new_black(n, kUnset);
  Point next_white = static_cast<Point>(beta), next_black = static_cast<Point>(alpha);
  std::uint64_t automorphisms = 1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& cc = comps[i];
    for (Point w : cc.whites) new_white[w] = w < beta ? w : next_white++;
    for (Point b : cc.blacks) new_black[b] = b < alpha ? b : next_black++;
    if (!cc.pinned) {
      automorphisms *= cc.symmetries;
      // Identical unpinned components may be permuted among themselves.
      std::uint64_t run = 1;
      for (std::size_t j = i; j > 0 && !comps[j - 1].pinned && comps[j - 1].code == cc.code; --j) ++run;
      automorphisms *= run;
    }
  }
  if (next_white != kept || next_black != kept)
    throw InvariantViolation("canonical labeling produced a non-contiguous label set");

  std::array<std::vector<Point>, 3> images;
  for (std::size_t c = 0; c < 3; ++c) {
    images[c].assign(kept, 0);
    for (Point w = 0; w < n; ++w) {
      if (new_white[w] == kUnset) continue;
      images[c][new_white[w]] = new_black[g.fwd[c][w]];
    }
  }
  return {Triple(Permutation(std::move(images[0])), Permutation(std::move(images[1])),
                 Permutation(std::move(images[2])), kept),
          automorphisms};
}

// ---------------------------------------------------------------------------

Triple LabeledSurface::embedded(std::size_t n) const {
  if (n < triple_.n())
    throw SchemaError("degree " + std::to_string(n) + " is too small to embed a surface with " +
                      std::to_string(triple_.n()) + " triangle pairs");
  return triple_.padded(n);
}

std::strong_ordering operator<=>(const LabeledSurface& a, const LabeledSurface& b) noexcept {
  if (auto c = a.alpha_ <=> b.alpha_; c != 0) return c;
  if (auto c = a.beta_ <=> b.beta_; c != 0) return c;
  if (auto c = a.triple_.n() <=> b.triple_.n(); c != 0) return c;
  return a.triple_ <=> b.triple_;
}

LabeledSurface canonical_form(const Triple& t, std::size_t alpha, std::size_t beta) {
  return LabeledSurface(alpha, beta, canonical_triple(t, alpha, beta, true).triple);
}

CheckerSurface::CheckerSurface(const Triple& t) {
  CanonicalForm cf = canonical_triple(t, 0, 0, false);
  triple_ = std::move(cf.triple);
  automorphisms_ = cf.automorphisms;
}

CheckerSurface CheckerSurface::double_triangles(std::size_t count) {
  return CheckerSurface(Triple::identity(count));
}

std::size_t CheckerSurface::double_triangle_count() const {
  std::size_t count = 0;
  for (Point w = 0; w < n(); ++w) {
    const Point b = triple_.blue()(w);
    if (triple_.red()(w) == b && triple_.yellow()(w) == b) ++count;
  }
  return count;
}

Triple disjoint_union(const Triple& a, const Triple& b) {
  const std::size_t n = a.n() + b.n();
  std::array<std::vector<Point>, 3> images;
  for (Color c : kColors) {
    auto& img = images[static_cast<std::size_t>(c)];
    img.resize(n);
    for (Point x = 0; x < a.n(); ++x) img[x] = a[c](x);
    for (Point x = 0; x < b.n(); ++x) img[a.n() + x] = static_cast<Point>(a.n()) + b[c](x);
  }
  return Triple(Permutation(std::move(images[0])), Permutation(std::move(images[1])),
                Permutation(std::move(images[2])), n);
}

CheckerSurface disjoint_union(const CheckerSurface& a, const CheckerSurface& b) {
  return CheckerSurface(disjoint_union(a.triple(), b.triple()));
}

std::vector<ComponentSummary> summarize(const Triple& t) {
  std::vector<ComponentSummary> out;
  for (Component& comp : components(t)) {
    ComponentSummary s;
    s.vertices = vertex_census(t, comp);
    s.chi = static_cast<long>(s.vertices.total()) - static_cast<long>(comp.size());
    s.genus = genus(s.chi);
    s.points = std::move(comp);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace checker
