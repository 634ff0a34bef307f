#include "checker/spherical.hpp"

#include <cmath>
#include <string>

#include "checker/error.hpp"

namespace checker {

Tensor3::Tensor3(std::array<std::size_t, 3> dims, std::vector<Complex> entries)
    : dims_(dims), entries_(std::move(entries)) {
  if (dims_[0] == 0 || dims_[1] == 0 || dims_[2] == 0)
    throw SchemaError("tensor dimensions must be positive");
  if (entries_.size() != dims_[0] * dims_[1] * dims_[2])
    throw SchemaError("tensor has " + std::to_string(entries_.size()) + " entries, expected " +
                      std::to_string(dims_[0] * dims_[1] * dims_[2]));
}

Tensor3 Tensor3::random_unit(std::array<std::size_t, 3> dims, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> entries(dims[0] * dims[1] * dims[2]);
  for (auto& e : entries) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    e = Complex(re, im);
  }
  return Tensor3(dims, std::move(entries)).normalized();
}

double Tensor3::norm() const {
  double s = 0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

Tensor3 Tensor3::normalized() const {
  const double nrm = norm();
  if (nrm == 0) throw SchemaError("cannot normalize the zero tensor");
  std::vector<Complex> e = entries_;
  for (auto& x : e) x /= nrm;
  return Tensor3(dims_, std::move(e));
}

namespace {

// Depth-first enumeration of edge indices for one component. Edges are
// visited in breadth-first triangle order, and each triangle's factor is
// multiplied in as soon as its last edge is assigned.
class ComponentSum {
 public:
  ComponentSum(const Triple& t, const Component& comp, const Tensor3& xi, std::uint64_t& spent,
               std::uint64_t budget)
      : xi_(xi), spent_(spent), budget_(budget) {
    const std::size_t n = t.n();
    std::array<std::vector<Point>, 3> inv;
    for (std::size_t c = 0; c < 3; ++c) {
      inv[c].resize(n);
      for (Point w = 0; w < n; ++w) inv[c][t[static_cast<Color>(c)](w)] = w;
    }
    // Edge (color c, white w) gets a slot on first appearance.
    std::vector<std::array<std::size_t, 3>> slot(n, {kNone, kNone, kNone});
    auto touch = [&](std::size_t c, Point w) {
      if (slot[w][c] == kNone) {
        slot[w][c] = edge_color_.size();
        edge_color_.push_back(c);
      }
      return slot[w][c];
    };

    std::vector<bool> seen_white(n, false), seen_black(n, false);
    std::vector<std::pair<bool, Point>> queue{{false, comp.front()}};
    seen_white[comp.front()] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto [black, tri] = queue[head];
      Factor f{black, {}};
      for (std::size_t c = 0; c < 3; ++c) {
        const Point w = black ? inv[c][tri] : tri;
        f.edges[c] = touch(c, w);
        if (black && !seen_white[w]) {
          seen_white[w] = true;
          queue.push_back({false, w});
        }
        if (!black) {
          const Point b = t[static_cast<Color>(c)](tri);
          if (!seen_black[b]) {
            seen_black[b] = true;
            queue.push_back({true, b});
          }
        }
      }
      factors_.push_back(f);
    }
    completes_at_.resize(edge_color_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& e = factors_[i].edges;
      completes_at_[std::max({e[0], e[1], e[2]})].push_back(i);
    }
    value_.assign(edge_color_.size(), 0);
  }

  Complex evaluate() {
    total_ = 0;
    recurse(0, Complex(1, 0));
    return total_;
  }

 private:
  static constexpr std::size_t kNone = SIZE_MAX;
  struct Factor {
    bool black;
    std::array<std::size_t, 3> edges;
  };

  void recurse(std::size_t depth, Complex partial) {
    if (depth == edge_color_.size()) {
      total_ += partial;
      return;
    }
    const std::size_t dim = xi_.dims()[edge_color_[depth]];
    for (std::size_t v = 0; v < dim; ++v) {
      value_[depth] = v;
      Complex p = partial;
      for (std::size_t fi : completes_at_[depth]) {
        const Factor& f = factors_[fi];
        const Complex x = xi_(value_[f.edges[0]], value_[f.edges[1]], value_[f.edges[2]]);
        p *= f.black ? std::conj(x) : x;
        if (++spent_ > budget_)
          throw BudgetExceeded("assignment enumeration exceeded " + std::to_string(budget_) +
                               " multiply-adds");
      }
      if (p == Complex(0, 0)) continue;
      recurse(depth + 1, p);
    }
  }

  const Tensor3& xi_;
  std::uint64_t& spent_;
  std::uint64_t budget_;
  std::vector<std::size_t> edge_color_;
  std::vector<Factor> factors_;
  std::vector<std::vector<std::size_t>> completes_at_;
  std::vector<std::size_t> value_;
  Complex total_;
};

}  // namespace

Complex spherical_assignment_sum(const Triple& t, const Tensor3& xi, std::uint64_t budget) {
  std::uint64_t spent = 0;
  Complex result(1, 0);
  for (const Component& comp : components(t)) result *= ComponentSum(t, comp, xi, spent, budget).evaluate();
  return result;
}

Complex spherical_assignment_sum(const CheckerSurface& s, const Tensor3& xi, std::uint64_t budget) {
  return spherical_assignment_sum(s.triple(), xi, budget);
}

Complex spherical_oracle(const Triple& t, const Tensor3& xi, std::uint64_t budget) {
  const std::size_t n = t.n();
  const auto& d = xi.dims();
  const std::size_t local = xi.size();
  // Work is n multiplications for each of local^n basis vectors.
  double work = static_cast<double>(n > 0 ? n : 1);
  std::size_t states = 1;
  for (std::size_t s = 0; s < n; ++s) {
    work *= static_cast<double>(local);
    if (work > static_cast<double>(budget))
      throw BudgetExceeded("tensor power of dimension " + std::to_string(local) + "^" +
                           std::to_string(n) + " exceeds the budget of " + std::to_string(budget));
    states *= local;
  }

  // Basis vector `idx` of X^{⊗n}: slot s holds the local index digit s of idx
  // (base d_b d_r d_y), which splits into (blue, red, yellow) indices.
  std::vector<std::size_t> blue(n), red(n), yellow(n);
  Complex inner(0, 0);
  for (std::size_t idx = 0; idx < states; ++idx) {
    std::size_t rest = idx;
    Complex v(1, 0);
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t digit = rest % local;
      rest /= local;
      blue[s] = digit / (d[1] * d[2]);
      red[s] = (digit / d[2]) % d[1];
      yellow[s] = digit % d[2];
      v *= xi(blue[s], red[s], yellow[s]);
    }
    if (v == Complex(0, 0)) continue;
    // (rho(t) v)(idx): the blue factor of slot s sits at slot t^blue(s), etc.
    Complex moved(1, 0);
    for (std::size_t s = 0; s < n; ++s)
      moved *= xi(blue[t.blue()(static_cast<Point>(s))], red[t.red()(static_cast<Point>(s))],
                  yellow[t.yellow()(static_cast<Point>(s))]);
    inner += moved * std::conj(v);
  }
  return inner;
}

}  // namespace checker
