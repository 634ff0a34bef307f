#pragma once

// Brute-force reference computations used by the unit and acceptance tests.
// Nothing here calls the library's canonical labeling, coset, or IK code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "checker/convolution.hpp"
#include "checker/perm.hpp"
#include "checker/rational.hpp"
#include "checker/surface.hpp"

namespace oracle {

using checker::Permutation;
using checker::Point;
using checker::Rational;
using checker::Triple;

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::vector<Triple> all_triples(std::size_t n) {
  const auto s = all_permutations(n);
  std::vector<Triple> out;
  for (const auto& b : s)
    for (const auto& r : s)
      for (const auto& y : s) out.emplace_back(b, r, y, n);
  return out;
}

// Index of a permutation of {0..n-1} in lexicographic order (Lehmer code).
inline std::size_t rank(const Permutation& p, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p(static_cast<Point>(j)) < p(static_cast<Point>(i))) ++smaller;
    r = r * (n - i) + smaller;
  }
  return r;
}

// Orbits of S_n acting on S_n x S_n by simultaneous conjugation, counted by
// union-find over the whole set of pairs.
inline std::size_t conjugation_orbit_count(std::size_t n) {
  const auto s = all_permutations(n);
  const std::size_t m = s.size();
  std::vector<std::size_t> parent(m * m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& h : s) {
        const Permutation hi = checker::inverse(h);
        const std::size_t a = rank(h * s[i] * hi, n), b = rank(h * s[j] * hi, n);
        parent[find(i * m + j)] = find(a * m + b);
      }
  std::size_t roots = 0;
  for (std::size_t x = 0; x < m * m; ++x)
    if (find(x) == x) ++roots;
  return roots;
}

// Burnside: (1/n!) sum_h |C(h)|^2, with |C(h)| = #{g : gh = hg}.
inline std::size_t burnside_pair_count(std::size_t n) {
  const auto s = all_permutations(n);
  std::size_t total = 0;
  for (const auto& h : s) {
    std::size_t c = 0;
    for (const auto& g : s)
      if (g * h == h * g) ++c;
    total += c * c;
  }
  return total / s.size();
}

// Every injective map {0..k-1} -> {0..m-1}, as image vectors.
inline std::vector<std::vector<Point>> injections(std::size_t k, std::size_t m) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur;
  std::vector<bool> used(m, false);
  std::function<void()> rec = [&] {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Point x = 0; x < m; ++x) {
      if (used[x]) continue;
      used[x] = true;
      cur.push_back(x);
      rec();
      cur.pop_back();
      used[x] = false;
    }
  };
  rec();
  return out;
}

// Transport of a pair (g1, g2) on {0..k-1} along the injection iota into S_m:
// iota(x) -> iota(g(x)), identity off the image.
inline Permutation transport(const Permutation& g, const std::vector<Point>& iota, std::size_t m) {
  std::vector<Point> img(m);
  std::iota(img.begin(), img.end(), Point{0});
  for (Point x = 0; x < iota.size(); ++x) img[iota[x]] = iota[g(x)];
  return Permutation(img);
}

// Image of a k-pair surface t in C[S_m x S_m]: one point mass per injection
// of its points, on the pair (b y^-1, r y^-1) transported along it.
inline checker::GroupAlgebraElement injection_lift(const Triple& t, std::size_t m) {
  const std::size_t k = t.n();
  const Permutation yi = checker::inverse(t.yellow());
  const Permutation g1 = (t.blue() * yi).padded(k), g2 = (t.red() * yi).padded(k);
  checker::GroupAlgebraElement out(m);
  for (const auto& iota : injections(k, m))
    out.add(Triple(transport(g1, iota, m), transport(g2, iota, m), Permutation::identity(m), m), 1);
  return out;
}

// Convolution on G_n by definition: (f*g)(x) = sum over all y in G_n of f(y) g(y^-1 x).
inline checker::GroupAlgebraElement naive_convolve(const checker::GroupAlgebraElement& f,
                                                   const checker::GroupAlgebraElement& g) {
  checker::GroupAlgebraElement out(f.n());
  for (const auto& x : all_triples(f.n())) {
    Rational v = 0;
    for (const auto& [y, a] : f.terms()) v += a * g.coefficient(checker::reverse(y) * x);
    out.add(x, v);
  }
  return out;
}

// Number of cycles of a permutation of {0..n-1}.
inline std::size_t cycle_total(const Permutation& p, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t c = 0;
  for (Point x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++c;
    for (Point y = x; !seen[y]; y = p(y)) seen[y] = true;
  }
  return c;
}

}  // namespace oracle
