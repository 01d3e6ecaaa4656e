#include <benchmark/benchmark.h>

#include <random>

#include "synthetic.hpp"
#include "tmv/stats.hpp"

namespace {

std::vector<tmv::PairRecord> records(std::size_t n) {
  std::mt19937_64 rng(9);
  std::vector<tmv::PairRecord> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(tmv::testing::random_pair_record(rng));
  return out;
}

void BM_Matrix(benchmark::State& state) {
  const auto input = records(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmv::correspondence_matrix(input, tmv::Direction::kEnDe).total());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * input.size()));
}

void BM_Table(benchmark::State& state) {
  const auto m = tmv::correspondence_matrix(records(10000), tmv::Direction::kEnDe);
  for (auto _ : state) benchmark::DoNotOptimize(m.table(state.range(0) != 0).total());
}

void BM_Merge(benchmark::State& state) {
  const auto all = records(20000);
  const std::span<const tmv::PairRecord> span(all);
  const auto a = tmv::correspondence_matrix(span.first(10000), tmv::Direction::kEnDe);
  const auto b = tmv::correspondence_matrix(span.last(10000), tmv::Direction::kEnDe);
  for (auto _ : state) benchmark::DoNotOptimize(merge(a, b).total());
}

}  // namespace

BENCHMARK(BM_Matrix)->Arg(1000)->Arg(100000);
BENCHMARK(BM_Table)->Arg(0)->Arg(1);
BENCHMARK(BM_Merge);

BENCHMARK_MAIN();
