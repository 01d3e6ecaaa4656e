#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmv/diagnostics.hpp"
#include "tmv/token.hpp"

namespace tmv {

/// Column layout of a CoNLL-style file. There is no auto-detection.
///
///   kConllU:  ID FORM LEMMA UPOS XPOS FEATS HEAD DEPREL DEPS MISC (10 columns)
///   kConll09: ID FORM LEMMA PLEMMA POS PPOS FEAT PFEAT HEAD PHEAD DEPREL
///             PDEPREL [FILLPRED PRED APRED...] (12 or more columns); gold
///             columns win, predicted ones fill in when gold is `_`.
enum class ConllLayout { kConllU, kConll09 };

std::string_view to_string(ConllLayout layout);
std::optional<ConllLayout> parse_layout(std::string_view text);

struct ConllOptions {
  ConllLayout layout = ConllLayout::kConllU;
  /// Prefix for generated sentence ids (`<doc_id>-<n>`). A `# sent_id = X`
  /// comment overrides the generated id.
  std::string doc_id = "s";
};

/// One blank-line separated block. `sentence` is empty when the block was
/// rejected; the block still occupies its position so that parallel files
/// stay in step.
struct SentenceBlock {
  std::optional<Sentence> sentence;
  std::size_t first_line = 0;
  std::size_t ordinal = 0;  // 1-based block number
};

/// Streaming reader; holds one block in memory at a time.
class ConllReader {
 public:
  ConllReader(std::istream& in, Language language, ConllOptions options = {});

  /// Next block, or nullopt at end of input. Problems go to `log()`.
  std::optional<SentenceBlock> next();

  [[nodiscard]] const DiagnosticLog& log() const { return log_; }
  [[nodiscard]] std::size_t blocks_read() const { return ordinal_; }

 private:
  std::optional<Token> parse_line(std::string_view line, bool& ok);
  void finish_block(SentenceBlock& block, std::vector<Token>& tokens, bool block_ok);

  std::istream& in_;
  Language language_;
  ConllOptions options_;
  DiagnosticLog log_;
  std::size_t line_no_ = 0;
  std::size_t ordinal_ = 0;
  std::string pending_id_;
};

struct ConllParseResult {
  std::vector<Sentence> sentences;
  DiagnosticLog log;
};

/// Reads a whole stream. Rejected blocks are left out of `sentences` and
/// reported in `log`.
ConllParseResult parse_conll(std::istream& in, Language language,
                             ConllOptions options = {});
ConllParseResult parse_conll(std::string_view text, Language language,
                             ConllOptions options = {});

/// Writes sentences back in the given layout, each preceded by a
/// `# sent_id` comment.
void write_conll(std::ostream& out, const std::vector<Sentence>& sentences,
                 ConllLayout layout = ConllLayout::kConllU);

/// Returns the index of a token on a head cycle, or 0 if the head links
/// form a forest.
int find_cycle(const std::vector<Token>& tokens);

}  // namespace tmv
