#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "synthetic.hpp"
#include "tmv/pairing.hpp"
#include "tmv/pipeline.hpp"

namespace {

struct Instance {
  std::vector<std::vector<int>> weights;
  std::vector<std::vector<bool>> main;
  std::vector<int> en_order;
  std::vector<int> de_order;
};

std::vector<Instance> instances(std::size_t n, std::size_t size) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> w(0, 3);
  std::vector<Instance> out(100);
  for (auto& inst : out) {
    inst.weights.assign(n, std::vector<int>(size));
    inst.main.assign(n, std::vector<bool>(size, false));
    for (auto& row : inst.weights) {
      for (int& x : row) x = w(rng);
    }
    for (std::size_t i = 0; i < n; ++i) inst.en_order.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < size; ++i) inst.de_order.push_back(static_cast<int>(i));
  }
  return out;
}

void BM_Greedy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = instances(n, n);
  for (auto _ : state) {
    for (const auto& i : input) {
      benchmark::DoNotOptimize(tmv::greedy_matching(i.weights, i.main, i.en_order, i.de_order));
    }
  }
}

void BM_Exhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = instances(n, n);
  for (auto _ : state) {
    for (const auto& i : input) benchmark::DoNotOptimize(tmv::exhaustive_matching(i.weights, i.main));
  }
}

void BM_PairStream(benchmark::State& state) {
  const auto c = tmv::testing::random_corpus(2000, 3);
  tmv::PipelineOptions options;
  options.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::istringstream en(c.en), de(c.de), al(c.alignment);
    std::size_t pairs = 0;
    tmv::pair_stream(en, de, al, options,
                     [&](const tmv::SentencePairResult& r) { pairs += r.pairing.pairs.size(); });
    benchmark::DoNotOptimize(pairs);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.pairs));
}

}  // namespace

BENCHMARK(BM_Greedy)->DenseRange(2, 8, 2);
BENCHMARK(BM_Exhaustive)->DenseRange(2, 8, 2);
BENCHMARK(BM_PairStream)->Arg(1)->Arg(4)->UseRealTime();

BENCHMARK_MAIN();
