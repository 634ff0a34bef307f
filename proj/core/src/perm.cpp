#include "checker/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace checker {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw SchemaError("permutation images are not a bijection of {1.." +
                        std::to_string(images_.size()) + "}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_line(std::span<const std::int64_t> one_based) {
  std::vector<Point> images;
  images.reserve(one_based.size());
  for (std::int64_t v : one_based) {
    if (v < 1 || static_cast<std::size_t>(v) > one_based.size())
      throw SchemaError("one-line image " + std::to_string(v) + " out of range 1.." +
                        std::to_string(one_based.size()));
    images.push_back(static_cast<Point>(v - 1));
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Cycle> parsed;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw SchemaError("expected '(' in cycle string: " + std::string(text));
    ++i;
    Cycle cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw SchemaError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw SchemaError("unexpected character in cycle string: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (v == 0) throw SchemaError("cycle points are 1-based");
      max_point = std::max(max_point, v);
      cycle.push_back(static_cast<Point>(v - 1));
    }
    parsed.push_back(std::move(cycle));
    skip_space();
  }
  std::vector<Point> images(std::max(degree, max_point));
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(images.size(), false);
  for (const Cycle& c : parsed) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (used[c[k]]) throw SchemaError("point repeated in cycle string: " + std::string(text));
      used[c[k]] = true;
      images[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

std::size_t Permutation::support_degree() const noexcept {
  std::size_t d = images_.size();
  while (d > 0 && images_[d - 1] == d - 1) --d;
  return d;
}

Permutation Permutation::padded(std::size_t degree) const {
  if (degree <= images_.size()) return *this;
  Permutation p = *this;
  p.images_.reserve(degree);
  for (std::size_t x = images_.size(); x < degree; ++x) p.images_.push_back(static_cast<Point>(x));
  return p;
}

std::vector<std::int64_t> Permutation::one_line() const {
  std::vector<std::int64_t> out;
  out.reserve(images_.size());
  for (Point x : images_) out.push_back(static_cast<std::int64_t>(x) + 1);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  for (const Cycle& c : cycles(*this)) {
    if (c.size() < 2) continue;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k] + 1;
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

bool operator==(const Permutation& a, const Permutation& b) noexcept {
  const std::size_t da = a.support_degree();
  if (da != b.support_degree()) return false;
  return std::equal(a.images_.begin(), a.images_.begin() + static_cast<std::ptrdiff_t>(da),
                    b.images_.begin());
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
  const std::size_t d = std::max(a.support_degree(), b.support_degree());
  for (Point x = 0; x < d; ++x) {
    if (auto c = a(x) <=> b(x); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Permutation::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  const std::size_t d = support_degree();
  for (std::size_t x = 0; x < d; ++x) h = (h ^ images_[x]) * 0x100000001b3ULL;
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  const std::size_t d = std::max(p.degree(), q.degree());
  std::vector<Point> images(d);
  for (Point x = 0; x < d; ++x) images[x] = p(q(x));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < p.degree(); ++x) images[p(x)] = x;
  return Permutation(std::move(images));
}

std::vector<Cycle> cycles(const Permutation& p, std::span<const Point> carrier) {
  std::vector<Point> sorted(carrier.begin(), carrier.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvariantViolation("cycle carrier contains duplicate points");
  auto in_carrier = [&](Point x) { return std::binary_search(sorted.begin(), sorted.end(), x); };

  std::vector<Cycle> out;
  std::vector<Point> visited;
  for (Point start : sorted) {
    if (std::binary_search(visited.begin(), visited.end(), start)) continue;
    Cycle c;
    Point x = start;
    do {
      if (!in_carrier(x)) throw InvariantViolation("cycle carrier is not invariant under the permutation");
      c.push_back(x);
      x = p(x);
    } while (x != start);
    for (Point y : c) visited.insert(std::lower_bound(visited.begin(), visited.end(), y), y);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cycle> cycles(const Permutation& p) {
  std::vector<Point> all(p.degree());
  std::iota(all.begin(), all.end(), Point{0});
  return cycles(p, all);
}

std::size_t cycle_count(const Permutation& p, std::span<const Point> carrier) {
  return cycles(p, carrier).size();
}

Permutation random_permutation(std::size_t degree, std::mt19937_64& rng) {
  return random_permutation_fixing(degree, 0, rng);
}

Permutation random_permutation_fixing(std::size_t degree, std::size_t fixed,
                                      std::mt19937_64& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  if (fixed < degree) std::shuffle(images.begin() + static_cast<std::ptrdiff_t>(fixed), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace checker
