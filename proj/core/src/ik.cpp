#include "checker/ik.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace checker {

IKElement IKElement::basis(const CheckerSurface& p, const Rational& coefficient) {
  IKElement x;
  x.add(p, coefficient);
  return x;
}

Rational IKElement::coefficient(const CheckerSurface& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t IKElement::degree() const {
  std::size_t d = 0;
  for (const auto& [p, c] : terms_) d = std::max(d, p.n());
  return d;
}

IKElement IKElement::homogeneous_part(std::size_t pairs) const {
  IKElement out;
  for (const auto& [p, c] : terms_)
    if (p.n() == pairs) out.terms_.emplace(p, c);
  return out;
}

void IKElement::add(const CheckerSurface& p, const Rational& coefficient) {
  if (coefficient == 0) return;
  Rational c = coefficient;
  c.canonicalize();
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IKElement& IKElement::operator+=(const IKElement& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

IKElement& IKElement::operator-=(const IKElement& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

IKElement& IKElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = scalar;
  k.canonicalize();
  for (auto& [p, c] : terms_) c *= k;
  return *this;
}

// ---------------------------------------------------------------------------

Triple glue(const Triple& p, const Triple& q, const PartialBijection& s) {
  const std::size_t k = p.n(), m = q.n();
  if (s.size() != k) throw SchemaError("partial bijection must cover every white triangle of p");

  constexpr Point kFree = UINT32_MAX;
  std::vector<Point> glued_to(m, kFree);  // q black -> p white
  std::size_t matched = 0;
  for (Point w = 0; w < k; ++w) {
    if (!s[w]) continue;
    const Point b = *s[w];
    if (b >= m || glued_to[b] != kFree) throw SchemaError("partial bijection is not injective");
    glued_to[b] = w;
    ++matched;
  }

  const std::size_t n = k + m - matched;
  std::vector<Point> black_label(m, kFree);  // unmatched q blacks follow p's blacks
  Point next = static_cast<Point>(k);
  for (Point b = 0; b < m; ++b)
    if (glued_to[b] == kFree) black_label[b] = next++;

  std::array<std::vector<Point>, 3> images;
  for (Color c : kColors) {
    auto& img = images[static_cast<std::size_t>(c)];
    img.reserve(n);
    for (Point w = 0; w < m; ++w) {
      const Point b = q[c](w);
      img.push_back(glued_to[b] == kFree ? black_label[b] : p[c](glued_to[b]));
    }
    for (Point w = 0; w < k; ++w)
      if (!s[w]) img.push_back(p[c](w));
  }
  return Triple(Permutation(std::move(images[0])), Permutation(std::move(images[1])),
                Permutation(std::move(images[2])), n);
}

std::uint64_t partial_bijection_count(std::size_t a, std::size_t b) {
  const Rational exact = [&] {
    Rational total = 0;
    for (std::size_t j = 0; j <= std::min(a, b); ++j)
      total += factorial(j) * binomial(a, j) * binomial(b, j);
    return total;
  }();
  if (!exact.get_num().fits_ulong_p()) return UINT64_MAX;
  return exact.get_num().get_ui();
}

namespace {

void enumerate_bijections(std::size_t w, std::size_t k, std::vector<bool>& used, PartialBijection& s,
                          const std::function<void(const PartialBijection&)>& visit) {
  if (w == k) {
    visit(s);
    return;
  }
  s[w] = std::nullopt;
  enumerate_bijections(w + 1, k, used, s, visit);
  for (Point b = 0; b < used.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    s[w] = b;
    enumerate_bijections(w + 1, k, used, s, visit);
    used[b] = false;
  }
  s[w] = std::nullopt;
}

}  // namespace

IKElement ik_product(const CheckerSurface& p, const CheckerSurface& q, std::uint64_t max_terms) {
  const std::uint64_t terms = partial_bijection_count(p.n(), q.n());
  if (terms > max_terms)
    throw BudgetExceeded("product needs " + std::to_string(terms) + " partial bijections; budget is " +
                         std::to_string(max_terms));
  std::map<CheckerSurface, std::uint64_t> counts;
  std::vector<bool> used(q.n(), false);
  PartialBijection s(p.n());
  enumerate_bijections(0, p.n(), used, s, [&](const PartialBijection& sb) {
    ++counts[CheckerSurface(glue(p.triple(), q.triple(), sb))];
  });
  IKElement out;
  for (const auto& [r, c] : counts) out.add(r, Rational(static_cast<unsigned long>(c)));
  return out;
}

IKElement ik_product(const IKElement& x, const IKElement& y, std::uint64_t max_terms) {
  IKElement out;
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms()) out += (a * b) * ik_product(p, q, max_terms);
  return out;
}

CheckerSurface graded_product(const CheckerSurface& p, const CheckerSurface& q) {
  return disjoint_union(p, q);
}

IKElement graded_product(const IKElement& x, const IKElement& y) {
  IKElement out;
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms()) out.add(graded_product(p, q), a * b);
  return out;
}

namespace {

// Sum of u over all gluings of one white triangle of p to one black triangle of q.
IKElement single_gluings(const CheckerSurface& p, const CheckerSurface& q) {
  IKElement out;
  PartialBijection s(p.n());
  for (Point w = 0; w < p.n(); ++w) {
    for (Point b = 0; b < q.n(); ++b) {
      s[w] = b;
      out.add(CheckerSurface(glue(p.triple(), q.triple(), s)), 1);
    }
    s[w] = std::nullopt;
  }
  return out;
}

}  // namespace

IKElement poisson_bracket(const CheckerSurface& p, const CheckerSurface& q) {
  return single_gluings(p, q) - single_gluings(q, p);
}

IKElement poisson_bracket(const IKElement& x, const IKElement& y) {
  IKElement out;
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms()) out += (a * b) * poisson_bracket(p, q);
  return out;
}

// ---------------------------------------------------------------------------

Rational lift_coefficient(const CheckerSurface& p, std::size_t m) {
  const std::size_t k = p.n();
  if (m < k)
    throw SchemaError("cannot lift a surface with " + std::to_string(k) + " triangle pairs to degree " +
                      std::to_string(m));
  const std::size_t f = p.double_triangle_count();
  return Rational(static_cast<unsigned long>(p.automorphisms())) * binomial(m - k + f, f);
}

std::vector<Triple> pair_class(const Triple& t) {
  const std::size_t n = t.n();
  const Permutation yi = inverse(t.yellow());
  const Permutation g1 = t.blue() * yi, g2 = t.red() * yi;
  std::set<Triple> seen;
  std::vector<Point> h(n);
  std::iota(h.begin(), h.end(), Point{0});
  const Permutation id = Permutation::identity(n);
  do {
    const Permutation hp(h);
    const Permutation hi = inverse(hp);
    seen.insert(Triple(hp * g1 * hi, hp * g2 * hi, id, n));
  } while (std::next_permutation(h.begin(), h.end()));
  return {seen.begin(), seen.end()};
}

GroupAlgebraElement lift(const CheckerSurface& p, std::size_t m) {
  const Rational c = lift_coefficient(p, m);
  GroupAlgebraElement out(m);
  for (const Triple& g : pair_class(p.triple().padded(m))) out.add(g, c);
  return out;
}

GroupAlgebraElement project(const IKElement& x, std::size_t n) {
  GroupAlgebraElement out(n);
  for (const auto& [p, a] : x.terms()) {
    if (p.n() > n) continue;
    GroupAlgebraElement l = lift(p, n);
    l *= a;
    out += l;
  }
  return out;
}

}  // namespace checker
