#include <benchmark/benchmark.h>

#include "cmprime/ecring.hpp"
#include "cmprime/prover15.hpp"
#include "cmprime/sequence.hpp"

using namespace cmprime;

namespace {

// Residue near the top of the range so operand sizes are realistic.
Residue big_residue(const Modulus& m) { return m.reduce(m.value() / 3 + 12345); }

void modmul(benchmark::State& state, MulKernel kernel) {
  const Modulus m(fk_exact(static_cast<unsigned long>(state.range(0))).F, kernel);
  Residue a = big_residue(m);
  const Residue b = m.sqr(a);
  for (auto _ : state) {
    a = m.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
  state.counters["bits"] = static_cast<double>(m.bits());
}

void chain(benchmark::State& state, MulKernel kernel) {
  const auto k = static_cast<unsigned long>(state.range(0));
  const Modulus m(fk_exact(k).F, kernel);
  const Residue d = m.from_int(3);
  const RingCurve c = curve15(m, d);
  const RingPoint p = point15(m, d);
  for (auto _ : state) benchmark::DoNotOptimize(double_chain(p, 2 * k + 1, c));
  state.SetComplexityN(state.range(0));
}

void test15_prime(benchmark::State& state) {
  const auto k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(test15(k));
}

}  // namespace

BENCHMARK_CAPTURE(modmul, gmp, MulKernel::Gmp)->RangeMultiplier(2)->Range(500, 8000);
BENCHMARK_CAPTURE(modmul, ntt, MulKernel::Ntt)->RangeMultiplier(2)->Range(500, 8000);
BENCHMARK_CAPTURE(chain, gmp, MulKernel::Gmp)
    ->RangeMultiplier(2)->Range(250, 4000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK_CAPTURE(chain, ntt, MulKernel::Ntt)
    ->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(test15_prime)->Arg(123)->Arg(3585)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
