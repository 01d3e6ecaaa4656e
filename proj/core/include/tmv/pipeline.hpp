#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include "tmv/alignment.hpp"
#include "tmv/annotated_io.hpp"
#include "tmv/classify.hpp"
#include "tmv/conll.hpp"
#include "tmv/diagnostics.hpp"
#include "tmv/pairing.hpp"

namespace tmv {

struct PipelineOptions {
  Scheme scheme = Scheme::kChain;
  ConllLayout layout = ConllLayout::kConllU;
  Indexing indexing = Indexing::kZeroBased;
  ClassifierOptions classifier;
  const MorphFallbackLexicon* lexicon = nullptr;  // null: built-in
  PairingOptions pairing;
  unsigned jobs = 1;
  /// Sentences handed to the workers per round.
  std::size_t batch_size = 1024;
  std::string en_doc_id = "en";
  std::string de_doc_id = "de";
};

AnnotatedSentence annotate_sentence(const Sentence& sentence, const PipelineOptions& options);

struct SentencePairResult {
  std::string pair_id;
  AnnotatedSentence en;
  AnnotatedSentence de;
  PairingResult pairing;
};

struct RunSummary {
  std::size_t sentences = 0;
  std::size_t vcs = 0;
  std::size_t rejected = 0;
  std::size_t sentence_pairs = 0;
  std::size_t skipped_pairs = 0;
  std::size_t pairs = 0;
  std::size_t unpaired_en = 0;
  std::size_t unpaired_de = 0;
  std::size_t dropped_links = 0;
  DiagnosticLog log;

  [[nodiscard]] std::string describe() const;
};

/// Reads, extracts and labels sentence by sentence; `sink` sees results in
/// input order regardless of `options.jobs`.
RunSummary annotate_stream(std::istream& in, Language language, const PipelineOptions& options,
                           const std::function<void(const AnnotatedSentence&)>& sink);

/// Walks an English file, a German file and an alignment file in step.
/// Blocks rejected on either side are skipped (and counted).
RunSummary pair_stream(std::istream& en, std::istream& de, std::istream& alignment,
                       const PipelineOptions& options,
                       const std::function<void(const SentencePairResult&)>& sink);

}  // namespace tmv
