#include <benchmark/benchmark.h>

#include "orbistab/bounds.hpp"
#include "orbistab/lattice.hpp"

using namespace orbistab;

namespace {

const StackyCurve kCurve{1, 2, {2, 3, 5}};

DecomposableSheaf sample_sheaf(std::size_t summands) {
  DecomposableSheaf sheaf;
  for (std::size_t i = 0; i < summands; ++i) {
    sheaf.line_summands.push_back(
        OrbiLineBundle{static_cast<long long>(i % 5) - 2,
                       {static_cast<long long>(i % 2), static_cast<long long>(i % 3),
                        static_cast<long long>(i % 5)}});
  }
  return sheaf;
}

void bm_modified_hilbert(benchmark::State& state) {
  const auto gen = GeneratingSheafSpec::balanced(kCurve);
  const auto sheaf = sample_sheaf(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(modified_hilbert(sheaf, gen, kCurve));
  }
}
BENCHMARK(bm_modified_hilbert);

void bm_hn_lattice(benchmark::State& state) {
  const auto gen = GeneratingSheafSpec::balanced(kCurve);
  const auto sheaf = sample_sheaf(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto lattice = build_lattice(sheaf, gen, kCurve);
    benchmark::DoNotOptimize(hn(lattice));
  }
}
BENCHMARK(bm_hn_lattice)->Arg(6)->Arg(10);

void bm_kleiman(benchmark::State& state) {
  const std::vector<Int> xs = {Int(3), Int(4), Int(5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kleiman_poly(2, xs));
  }
}
BENCHMARK(bm_kleiman);

void bm_point_table(benchmark::State& state) {
  const auto points = p332_points();
  const auto twists = p332_separating_twists();
  for (auto _ : state) {
    benchmark::DoNotOptimize(point_table(points, twists));
  }
}
BENCHMARK(bm_point_table);

}  // namespace

BENCHMARK_MAIN();
