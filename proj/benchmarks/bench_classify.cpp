#include <benchmark/benchmark.h>

#include <sstream>

#include "synthetic.hpp"
#include "tmv/conll.hpp"
#include "tmv/pipeline.hpp"

namespace {

std::vector<tmv::Sentence> sentences(tmv::Language lang) {
  const auto c = tmv::testing::random_corpus(2000, 11);
  return tmv::parse_conll(lang == tmv::Language::kEnglish ? c.en : c.de, lang).sentences;
}

void annotate(benchmark::State& state, tmv::Language lang) {
  const auto input = sentences(lang);
  const tmv::PipelineOptions options;
  std::size_t vcs = 0;
  for (auto _ : state) {
    for (const auto& s : input) vcs += tmv::annotate_sentence(s, options).vcs.size();
  }
  benchmark::DoNotOptimize(vcs);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * input.size()));
}

void BM_AnnotateEnglish(benchmark::State& state) { annotate(state, tmv::Language::kEnglish); }
void BM_AnnotateGerman(benchmark::State& state) { annotate(state, tmv::Language::kGerman); }

void BM_ParseConll(benchmark::State& state) {
  const auto c = tmv::testing::random_corpus(2000, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tmv::parse_conll(c.de, tmv::Language::kGerman).sentences.size());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * c.de.size()));
}

}  // namespace

BENCHMARK(BM_AnnotateEnglish);
BENCHMARK(BM_AnnotateGerman);
BENCHMARK(BM_ParseConll);

BENCHMARK_MAIN();
