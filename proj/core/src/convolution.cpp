#include "checker/convolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "checker/cosets.hpp"

namespace checker {

GroupAlgebraElement GroupAlgebraElement::point_mass(const Triple& g, std::size_t n,
                                                    const Rational& weight) {
  GroupAlgebraElement f(n);
  f.add(g, weight);
  return f;
}

Rational GroupAlgebraElement::coefficient(const Triple& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GroupAlgebraElement::mass() const {
  Rational total = 0;
  for (const auto& [g, c] : terms_) total += c;
  return total;
}

void GroupAlgebraElement::add(const Triple& g, const Rational& weight) {
  if (g.blue().support_degree() > n_ || g.red().support_degree() > n_ ||
      g.yellow().support_degree() > n_)
    throw SchemaError("group element does not live in G_" + std::to_string(n_));
  if (weight == 0) return;
  Rational w = weight;
  w.canonicalize();
  auto [it, inserted] = terms_.try_emplace(g, w);
  if (!inserted) {
    it->second += w;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.n_ != n_) throw SchemaError("group algebra elements live in different G_n");
  for (const auto& [g, c] : other.terms_) add(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  Rational k = scalar;
  k.canonicalize();
  for (auto& [g, c] : terms_) c *= k;
  return *this;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  if (f.n() != g.n()) throw SchemaError("cannot convolve elements of different G_n");
  GroupAlgebraElement out(f.n());
  for (const auto& [y, fy] : f.terms())
    for (const auto& [z, gz] : g.terms()) out.add(y * z, fy * gz);
  return out;
}

namespace {

// Calls fn(h) for every permutation of degree n fixing 0..fixed-1.
template <typename Fn>
void for_each_fixing(std::size_t n, std::size_t fixed, Fn&& fn) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  const auto first = images.begin() + static_cast<std::ptrdiff_t>(std::min(fixed, n));
  do {
    fn(images);
  } while (std::next_permutation(first, images.end()));
}

}  // namespace

GroupAlgebraElement delta_subgroup(std::size_t alpha, std::size_t n) {
  if (alpha > n) throw SchemaError("alpha exceeds n");
  GroupAlgebraElement f(n);
  const Rational weight = Rational(1) / factorial(n - alpha);
  for_each_fixing(n, alpha, [&](const std::vector<Point>& h) {
    f.add(Triple::diagonal(Permutation(h), n), weight);
  });
  return f;
}

GroupAlgebraElement delta_coset(const LabeledSurface& p, std::size_t n) {
  const Triple a0 = p.embedded(n);
  std::vector<Triple> lefts, rights;
  for_each_fixing(n, p.alpha(), [&](const std::vector<Point>& h) {
    lefts.push_back(Triple::diagonal(Permutation(h), n));
  });
  for_each_fixing(n, p.beta(), [&](const std::vector<Point>& h) {
    rights.push_back(Triple::diagonal(Permutation(h), n));
  });
  std::set<Triple> coset;
  for (const Triple& l : lefts)
    for (const Triple& r : rights) coset.insert(l * a0 * r);
  GroupAlgebraElement f(n);
  const Rational weight(1, static_cast<unsigned long>(coset.size()));
  for (const Triple& g : coset) f.add(g, weight);
  return f;
}

CosetAlgebraElement coset_decomposition(const Triple& a0, const Triple& b0, std::size_t alpha,
                                        std::size_t beta, std::size_t gamma, std::size_t n) {
  if (a0.n() > n || b0.n() > n) throw SchemaError("representatives do not fit in degree n");
  if (alpha > n || beta > n || gamma > n) throw SchemaError("label counts exceed n");
  const Triple a = a0.padded(n), b = b0.padded(n);

  std::map<LabeledSurface, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::array<std::vector<Point>, 3> images;
  for (auto& img : images) img.resize(n);
  for_each_fixing(n, beta, [&](const std::vector<Point>& h) {
    for (Color c : kColors) {
      auto& img = images[static_cast<std::size_t>(c)];
      for (Point x = 0; x < n; ++x) img[x] = a[c](h[b[c](x)]);
    }
    const Triple product{Permutation(images[0]), Permutation(images[1]), Permutation(images[2]), n};
    ++counts[canonical_form(product, alpha, gamma)];
    ++total;
  });

  CosetAlgebraElement out;
  for (const auto& [r, k] : counts) out.emplace(r, Rational(static_cast<unsigned long>(k),
                                                           static_cast<unsigned long>(total)));
  for (auto& [r, c] : out) c.canonicalize();
  return out;
}

CosetAlgebraElement coset_decomposition(const LabeledSurface& p, const LabeledSurface& q,
                                        std::size_t n) {
  if (p.beta() != q.alpha()) throw SchemaError("inner label counts of p and q differ");
  return coset_decomposition(p.embedded(n), q.embedded(n), p.alpha(), p.beta(), q.beta(), n);
}

std::vector<Rational> sigma_series(const LabeledSurface& p, const LabeledSurface& q,
                                   const std::vector<std::size_t>& degrees) {
  const LabeledSurface target = circledast(p, q);
  std::vector<Rational> out;
  out.reserve(degrees.size());
  for (std::size_t n : degrees) {
    const CosetAlgebraElement dec = coset_decomposition(p, q, n);
    auto it = dec.find(target);
    out.push_back(it == dec.end() ? Rational(0) : it->second);
  }
  return out;
}

}  // namespace checker
