#include <benchmark/benchmark.h>

#include "latca/bipermutive_rule.hpp"
#include "latca/ca.hpp"
#include "latca/generator_spec.hpp"
#include "latca/latin_square.hpp"
#include "latca/search.hpp"

namespace {

void BM_EnumerateInvertible(benchmark::State& state) {
  const int diameter = static_cast<int>(state.range(0));
  latca::SearchOptions opts;
  opts.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto report = latca::enumerate_invertible(diameter, opts);
    benchmark::DoNotOptimize(report.invertible_codes.data());
  }
  state.counters["candidates"] = static_cast<double>(
      latca::enumerate_invertible(diameter, opts).total_generators);
}
BENCHMARK(BM_EnumerateInvertible)
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 2})
    ->Args({6, 8})
    ->Unit(benchmark::kMillisecond);

void BM_IsInvertible(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  // chi rule x1 ^ x2 ^ x2x3, invertible at odd sizes
  const latca::TruthTable chi = latca::TruthTable::from_code(3, 180);
  for (auto _ : state) {
    bool v = latca::is_invertible(latca::PbcaMap{chi, size});
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_IsInvertible)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_BuildSquare(benchmark::State& state) {
  const int diameter = static_cast<int>(state.range(0));
  const latca::TruthTable g(diameter - 2);  // zero generator
  const latca::TruthTable f =
      latca::expand(latca::BipermutiveRule(diameter, g));
  for (auto _ : state) {
    auto square = latca::build_square(f);
    benchmark::DoNotOptimize(square.order());
  }
}
BENCHMARK(BM_BuildSquare)->Arg(4)->Arg(6)->Arg(8);

void BM_DiagonalVerdict(benchmark::State& state) {
  const latca::TruthTable g = latca::parse_generator("x1^x3^x1x4", 4);
  const latca::BipermutiveRule rule(6, g);
  for (auto _ : state) {
    bool v = latca::diagonal_is_permutation(rule);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_DiagonalVerdict);

void BM_Decomposition(benchmark::State& state) {
  const int diameter = static_cast<int>(state.range(0));
  // x2 generator: the pure-shift rule, linear, always decomposable
  latca::TruthTable g(diameter - 2);
  for (std::uint32_t v = 0; v < g.size(); ++v)
    g.set_bit(v, (v >> (diameter - 4)) & 1u);
  const auto square = latca::build_square(
      latca::expand(latca::BipermutiveRule(diameter, g)));
  for (auto _ : state) {
    auto result = latca::find_disjoint_decomposition(square);
    benchmark::DoNotOptimize(result.nodes_visited);
  }
}
BENCHMARK(BM_Decomposition)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
