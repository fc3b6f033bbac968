#include <benchmark/benchmark.h>

#include "prymscope/search.hpp"

using namespace prymscope;

namespace {

CoverMatrix ramified() {
  return validate_matrix(4, 1, 6, std::vector<int>{1, 1, 1, 3, 3, 3});
}

CoverMatrix wide_two_rows() {
  // 12 columns over Z/8, both row sums zero
  return validate_matrix(8, 2, 12,
                         std::vector<int>{1, 1, 1, 1, 3, 3, 3, 3, 5, 5, 7, 7,
                                          2, 2, 2, 2, 6, 6, 6, 6, 4, 4, 4, 4});
}

void BM_EigenDim(benchmark::State& state) {
  ResidueVector alpha(8, {1, 1, 1, 1, 3, 3, 3, 3, 5, 5, 7, 7});
  for (auto _ : state) benchmark::DoNotOptimize(eigen_dim(alpha));
}
BENCHMARK(BM_EigenDim);

void BM_CharacterTable(benchmark::State& state) {
  CoverMatrix a = wide_two_rows();
  for (auto _ : state) benchmark::DoNotOptimize(character_table(a));
}
BENCHMARK(BM_CharacterTable);

void BM_CanonicalKeySingleRow(benchmark::State& state) {
  CoverMatrix a = ramified();
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(a, SymmetryLevel::kFull));
  }
}
BENCHMARK(BM_CanonicalKeySingleRow);

void BM_CanonicalKeyTwoRows(benchmark::State& state) {
  CoverMatrix a = wide_two_rows();
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(a, SymmetryLevel::kFull));
  }
}
BENCHMARK(BM_CanonicalKeyTwoRows);

void BM_EnumerateCovers(benchmark::State& state) {
  SearchSpec spec;
  spec.modulus = 4;
  spec.rows = 1;
  spec.cols_min = 4;
  spec.cols_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_covers(spec));
}
BENCHMARK(BM_EnumerateCovers)->Arg(6)->Arg(8)->Arg(10);

void BM_AnalyzePair(benchmark::State& state) {
  CoverData cover = character_table(ramified());
  ResidueVector sigma(4, {2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_pair(cover, sigma, false, BoundMode::kUnitaryOnly));
  }
}
BENCHMARK(BM_AnalyzePair);

}  // namespace

BENCHMARK_MAIN();
