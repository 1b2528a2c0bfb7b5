// Serial reference kernels against their OpenMP and shared-elimination
// counterparts.

#include <benchmark/benchmark.h>

#include "welded/alexander.hpp"
#include "welded/circuit.hpp"
#include "welded/generators.hpp"
#include "welded/minors.hpp"

namespace {

using namespace welded;

PolyMatrix bench_matrix(int n, int q) {
  Rng rng(42);
  PolyShape shape;
  shape.nvars = 2;
  shape.max_terms = 3;
  return random_matrix(rng, n + q, 2 * n + q, shape);
}

void minors(benchmark::State& state, MinorMethod method) {
  const int n = static_cast<int>(state.range(0));
  const PolyMatrix m = bench_matrix(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_minors(m, 2 * n, method));
  state.SetLabel("n=" + std::to_string(n) + " q=4");
}

void BM_MinorsSerial(benchmark::State& s) { minors(s, MinorMethod::serial); }
void BM_MinorsParallel(benchmark::State& s) { minors(s, MinorMethod::parallel); }
void BM_MinorsShared(benchmark::State& s) { minors(s, MinorMethod::shared); }
BENCHMARK(BM_MinorsSerial)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsParallel)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinorsShared)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void contraction(benchmark::State& state, Execution exec) {
  Rng rng(7);
  const int disks = static_cast<int>(state.range(0));
  std::vector<int> arities(static_cast<std::size_t>(disks), 6);
  const CircuitDiagram p = random_circuit(rng, random_entering(rng, 3), arities, 0.0);
  std::vector<InvariantTensor> inputs;
  PolyShape shape;
  for (int k = 0; k < disks; ++k) inputs.push_back(random_tensor(rng, 6, 3, shape, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma(p, inputs, exec));
}

void BM_ContractSerial(benchmark::State& s) { contraction(s, Execution::serial); }
void BM_ContractParallel(benchmark::State& s) { contraction(s, Execution::parallel); }
BENCHMARK(BM_ContractSerial)->DenseRange(1, 2);
BENCHMARK(BM_ContractParallel)->DenseRange(1, 2);

}  // namespace

BENCHMARK_MAIN();
