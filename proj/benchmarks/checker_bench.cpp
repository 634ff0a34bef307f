#include <benchmark/benchmark.h>

#include <random>

#include "checker/canonical.hpp"
#include "checker/convolution.hpp"
#include "checker/cosets.hpp"
#include "checker/ik.hpp"
#include "checker/spherical.hpp"

using namespace checker;

namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Triple> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(Triple::random(n, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(inputs[i++ % inputs.size()], 1, 1));
}
BENCHMARK(BM_CanonicalForm)->RangeMultiplier(2)->Range(4, 64);

void BM_Circledast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const auto p = canonical_form(Triple::random(n, rng), 2, 2);
  const auto q = canonical_form(Triple::random(n, rng), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(circledast(p, q));
}
BENCHMARK(BM_Circledast)->DenseRange(2, 8, 2);

// Coset decomposition enumerates (n - beta)! diagonal elements.
void BM_CosetDecomposition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = canonical_form(Triple(Permutation::from_cycles("(1 2)"), {}, {}, 2), 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(coset_decomposition(p, p, n));
}
BENCHMARK(BM_CosetDecomposition)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_IKProduct(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const CheckerSurface p(Triple::random(k, rng)), q(Triple::random(k, rng));
  for (auto _ : state) benchmark::DoNotOptimize(ik_product(p, q));
  state.counters["bijections"] = static_cast<double>(partial_bijection_count(k, k));
}
BENCHMARK(BM_IKProduct)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_SphericalAssignmentSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  const Triple t = Triple::random(n, rng);
  const Tensor3 xi = Tensor3::random_unit({2, 2, 2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spherical_assignment_sum(t, xi));
}
BENCHMARK(BM_SphericalAssignmentSum)->DenseRange(2, 8, 2);

void BM_SphericalTensorPower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  const Triple t = Triple::random(n, rng);
  const Tensor3 xi = Tensor3::random_unit({2, 2, 2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spherical_oracle(t, xi));
}
BENCHMARK(BM_SphericalTensorPower)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
