#include <benchmark/benchmark.h>

#include <random>

#include "tw/lattice.hpp"
#include "tw/normal_form.hpp"
#include "tw/relations.hpp"
#include "tw/sdp.hpp"
#include "tw/symplectic.hpp"

namespace {

auto random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) -> tw::IntMatrix {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  tw::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  }
  return m;
}

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(tw::hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_SmithInvariants(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(tw::smith_invariants(m));
}
BENCHMARK(BM_SmithInvariants)->Arg(8)->Arg(16);

void BM_UgConstruction(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tw::UgSpace(g).rank());
}
BENCHMARK(BM_UgConstruction)->DenseRange(3, 5);

void BM_TildeV3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tw::tilde_v3().index_ug_tilde);
}
BENCHMARK(BM_TildeV3);

void BM_Containment(benchmark::State& state) {
  const tw::Splitting s{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(tw::containment_check(s).ok());
}
BENCHMARK(BM_Containment)->Args({1, 2})->Args({2, 3});

void BM_RelationSuite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tw::relation_suite(n).ok());
}
BENCHMARK(BM_RelationSuite)->Arg(3)->Arg(4);

void BM_DisplacementSearch(benchmark::State& state) {
  const tw::InducedAction act(tw::SpaceKind::Ug, 3);
  tw::DisplacementInstance inst;
  std::vector<tw::IntVector> rows;
  for (std::size_t i = 0; i < 12; ++i) rows.push_back(tw::unit_vector(act.dimension(), i));
  inst.b = tw::Lattice::from_generators(act.dimension(), rows);
  inst.x = {rows[0], rows[5]};
  for (auto _ : state) benchmark::DoNotOptimize(tw::displacement_search(inst, act, {}).nodes);
}
BENCHMARK(BM_DisplacementSearch);

}  // namespace

BENCHMARK_MAIN();
