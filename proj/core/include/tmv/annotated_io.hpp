#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tmv/diagnostics.hpp"
#include "tmv/label.hpp"
#include "tmv/token.hpp"
#include "tmv/verbal_complex.hpp"

namespace tmv {

struct LabeledVC {
  VerbalComplex vc;
  TMVLabel label;
};

struct AnnotatedSentence {
  Sentence sentence;
  std::vector<LabeledVC> vcs;
};

/// Column header of the annotated-VC TSV.
inline constexpr const char* kAnnotatedHeader =
    "sentence_id\tvc_token_indices\tmain_verb_form\tmain_verb_lemma\t"
    "tense_label\tmood\tvoice\tfiniteness\tprogressive";

/// Incremental writer: header on construction, one row per VC, summary
/// comment (`# sentences=N vcs=M`) on `finish()`.
class AnnotatedWriter {
 public:
  explicit AnnotatedWriter(std::ostream& out);
  void write(const AnnotatedSentence& s);
  void finish();

  [[nodiscard]] std::size_t sentences() const { return sentences_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }

 private:
  std::ostream& out_;
  std::size_t sentences_ = 0;
  std::size_t rows_ = 0;
  bool finished_ = false;
};

/// Rows in sentence order, then by leftmost VC token. Throws
/// std::ios_base::failure if the sink goes bad.
void write_annotated(const std::vector<AnnotatedSentence>& sentences, std::ostream& sink);

std::string format_annotated_row(const Sentence& s, const LabeledVC& v);

/// One row read back from an annotated TSV.
struct AnnotatedRecord {
  std::string sentence_id;
  std::vector<int> members;
  std::string main_verb_form;
  std::string main_verb_lemma;
  TMVLabel label;
};

struct AnnotatedReadResult {
  std::vector<AnnotatedRecord> records;
  DiagnosticLog log;
};

AnnotatedReadResult read_annotated(std::istream& in);

}  // namespace tmv
