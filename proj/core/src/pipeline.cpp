#include "tmv/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace tmv {

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads, each taking one
// contiguous slice. Results are written by index, so order is preserved.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

const MorphFallbackLexicon& lexicon_of(const PipelineOptions& o) {
  return o.lexicon != nullptr ? *o.lexicon : MorphFallbackLexicon::builtin();
}

}  // namespace

AnnotatedSentence annotate_sentence(const Sentence& sentence, const PipelineOptions& options) {
  AnnotatedSentence out;
  out.sentence = sentence;
  for (auto& vc : extract_vcs(sentence, options.scheme)) {
    TMVLabel label = classify(vc, sentence, options.classifier, lexicon_of(options));
    out.vcs.push_back({std::move(vc), label});
  }
  return out;
}

std::string RunSummary::describe() const {
  std::ostringstream s;
  s << "sentences=" << sentences << " vcs=" << vcs << " rejected=" << rejected;
  if (sentence_pairs > 0 || skipped_pairs > 0) {
    s << " sentence_pairs=" << sentence_pairs << " skipped_pairs=" << skipped_pairs
      << " pairs=" << pairs << " unpaired_en=" << unpaired_en << " unpaired_de=" << unpaired_de
      << " dropped_links=" << dropped_links;
  }
  s << " warnings=" << log.warning_count() << " errors=" << log.error_count();
  return s.str();
}

RunSummary annotate_stream(std::istream& in, Language language, const PipelineOptions& options,
                           const std::function<void(const AnnotatedSentence&)>& sink) {
  RunSummary summary;
  ConllReader reader(in, language,
                     {options.layout,
                      language == Language::kEnglish ? options.en_doc_id : options.de_doc_id});
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);
  bool done = false;
  while (!done) {
    std::vector<Sentence> batch;
    while (batch.size() < batch_size) {
      auto block = reader.next();
      if (!block) {
        done = true;
        break;
      }
      if (block->sentence) {
        batch.push_back(std::move(*block->sentence));
      } else {
        ++summary.rejected;
      }
    }
    std::vector<AnnotatedSentence> results(batch.size());
    parallel_for(batch.size(), options.jobs,
                 [&](std::size_t i) { results[i] = annotate_sentence(batch[i], options); });
    for (const auto& r : results) {
      ++summary.sentences;
      summary.vcs += r.vcs.size();
      sink(r);
    }
  }
  summary.log.append(reader.log());
  return summary;
}

RunSummary pair_stream(std::istream& en, std::istream& de, std::istream& alignment,
                       const PipelineOptions& options,
                       const std::function<void(const SentencePairResult&)>& sink) {
  RunSummary summary;
  ConllReader en_reader(en, Language::kEnglish, {options.layout, options.en_doc_id});
  ConllReader de_reader(de, Language::kGerman, {options.layout, options.de_doc_id});
  AlignmentReader align_reader(alignment, options.indexing);
  DiagnosticLog pair_log;
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);

  struct Job {
    Sentence en;
    Sentence de;
    AlignmentSet links;
    std::size_t ordinal = 0;
  };

  bool done = false;
  std::size_t ordinal = 0;
  while (!done) {
    std::vector<Job> batch;
    while (batch.size() < batch_size) {
      auto e = en_reader.next();
      auto d = de_reader.next();
      auto a = align_reader.next();
      if (!e || !d || !a) {
        if (e || d || a) {
          pair_log.error(0, "input files differ in length: stopped after sentence pair " +
                                std::to_string(ordinal));
        }
        done = true;
        break;
      }
      ++ordinal;
      if (!e->sentence || !d->sentence) {
        ++summary.skipped_pairs;
        summary.rejected += (e->sentence ? 0 : 1) + (d->sentence ? 0 : 1);
        continue;
      }
      Job job{std::move(*e->sentence), std::move(*d->sentence), std::move(*a), ordinal};
      job.links.id = job.en.id;
      batch.push_back(std::move(job));
    }
    std::vector<SentencePairResult> results(batch.size());
    parallel_for(batch.size(), options.jobs, [&](std::size_t i) {
      const Job& job = batch[i];
      SentencePairResult& r = results[i];
      r.pair_id = job.links.id;
      r.en = annotate_sentence(job.en, options);
      r.de = annotate_sentence(job.de, options);
      r.pairing = pair_vcs(r.en.vcs, r.de.vcs, job.links, job.en.size(), job.de.size(),
                           options.pairing);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      ++summary.sentence_pairs;
      summary.sentences += 2;
      summary.vcs += r.en.vcs.size() + r.de.vcs.size();
      summary.pairs += r.pairing.pairs.size();
      summary.unpaired_en += r.pairing.unpaired_en.size();
      summary.unpaired_de += r.pairing.unpaired_de.size();
      summary.dropped_links += r.pairing.dropped_links;
      if (r.pairing.dropped_links > 0) {
        pair_log.warn(0, "alignment line " + std::to_string(batch[i].ordinal) +
                                            ": dropped " + std::to_string(r.pairing.dropped_links) +
                                            " link(s) outside sentence pair " + r.pair_id);
      }
      if (r.pairing.fell_back) {
        pair_log.warn(0, "sentence pair " + r.pair_id +
                                            ": too many complexes for exhaustive matching, used greedy");
      }
      sink(r);
    }
  }
  summary.log.append(en_reader.log(), "english");
  summary.log.append(de_reader.log(), "german");
  summary.log.append(align_reader.log(), "alignment");
  summary.log.append(pair_log);
  return summary;
}

}  // namespace tmv
