#include "checker/cosets.hpp"

#include <algorithm>
#include <numeric>

#include "checker/complex.hpp"

namespace checker {

Permutation theta(std::size_t j, std::size_t beta) {
  std::vector<Point> images(beta + 2 * j);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t k = 0; k < j; ++k) {
    images[beta + k] = static_cast<Point>(beta + j + k);
    images[beta + j + k] = static_cast<Point>(beta + k);
  }
  return Permutation(std::move(images));
}

DoubleCoset identity_morphism(std::size_t beta) {
  return canonical_form(Triple::identity(beta), beta, beta);
}

DoubleCoset shifted_product(const Triple& p, const Triple& q, std::size_t alpha, std::size_t beta,
                            std::size_t gamma, std::size_t j) {
  if (beta > p.n() || beta > q.n() || alpha > p.n() || gamma > q.n())
    throw SchemaError("label counts do not fit the representatives");
  const std::size_t n = std::max(p.n(), q.n()) + 2 * j + beta;
  const Triple shift = Triple::diagonal(theta(j, beta), n);
  return canonical_form(p.padded(n) * shift * q.padded(n), alpha, gamma);
}

DoubleCoset circledast(const Triple& p, const Triple& q, std::size_t alpha, std::size_t beta,
                       std::size_t gamma) {
  const std::size_t j0 = std::max(p.n(), q.n());
  DoubleCoset first = shifted_product(p, q, alpha, beta, gamma, j0);
  DoubleCoset second = shifted_product(p, q, alpha, beta, gamma, j0 + 1);
  if (!(first == second))
    throw StabilizationFailure("shifted products differ at j = " + std::to_string(j0) + " and j = " +
                               std::to_string(j0 + 1));
  return first;
}

DoubleCoset circledast(const DoubleCoset& p, const DoubleCoset& q) {
  if (p.beta() != q.alpha())
    throw SchemaError("cannot compose: left factor has " + std::to_string(p.beta()) +
                      " white labels, right factor has " + std::to_string(q.alpha()) + " black labels");
  return circledast(p.triple(), q.triple(), p.alpha(), p.beta(), q.beta());
}

DoubleCoset concat_geometric(const DoubleCoset& p, const DoubleCoset& q) {
  if (p.beta() != q.alpha())
    throw SchemaError("cannot glue: " + std::to_string(p.beta()) + " labeled white triangles against " +
                      std::to_string(q.alpha()) + " labeled black triangles");
  const std::size_t alpha = p.alpha(), beta = p.beta(), gamma = q.beta();

  CellComplex cx;
  const std::size_t sp = cx.add_surface(p.triple());
  const std::size_t sq = cx.add_surface(q.triple());
  for (Point j = 0; j < beta; ++j) {
    const std::size_t hole_p = cx.triangle_index(sp, false, j);
    const std::size_t hole_q = cx.triangle_index(sq, true, j);
    cx.remove_interior(hole_p);
    cx.remove_interior(hole_q);
    cx.identify_boundaries(hole_p, hole_q);
  }
  const Triple glued = cx.to_triple([&](const CellComplex::Triangle& t) -> std::optional<Point> {
    if (t.black && t.surface == sp && t.label < alpha) return t.label;
    if (!t.black && t.surface == sq && t.label < gamma) return t.label;
    return std::nullopt;
  });
  return canonical_form(glued, alpha, gamma);
}

DoubleCoset star(const DoubleCoset& p) {
  return canonical_form(reverse(p.triple()), p.beta(), p.alpha());
}

}  // namespace checker
