#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmv/label.hpp"
#include "tmv/token.hpp"
#include "tmv/verbal_complex.hpp"

namespace tmv {

enum class TemporalOrientation { kFuture, kPast, kNeutral };

std::string_view to_string(TemporalOrientation o);

/// Single-word temporal terms, each tagged future/past/neutral.
/// File format: `term<TAB>future|past|neutral`, `#` comments.
class TemporalLexicon {
 public:
  TemporalLexicon() = default;

  static const TemporalLexicon& builtin();
  static TemporalLexicon load(std::istream& in);
  static TemporalLexicon load(std::string_view text);
  static TemporalLexicon load_file(const std::string& path);

  void add(std::string_view term, TemporalOrientation orientation);
  [[nodiscard]] std::optional<TemporalOrientation> find(std::string_view term) const;
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

 private:
  std::map<std::string, TemporalOrientation, std::less<>> terms_;
};

enum class GrammaticalNumber { kSingular, kPlural };

struct TemporalExpression {
  std::string lemma;
  /// Governing preposition form, "adverb", or "np".
  std::string marker;
  int position = 0;
  TemporalOrientation orientation = TemporalOrientation::kNeutral;

  friend bool operator==(const TemporalExpression&, const TemporalExpression&) = default;
};

struct FeatureRecord {
  std::string sentence_id;
  std::vector<int> vc_members;
  std::string main_verb_lemma;
  std::string pattern;  // member tags joined with '+'
  TMVLabel label;
  std::optional<std::string> subject_lemma;
  std::optional<std::string> subject_determiner;
  std::optional<GrammaticalNumber> subject_number;
  std::vector<TemporalExpression> temporal;
  bool conditional = false;
};

struct FeatureOptions {
  std::vector<std::string> conditional_markers = {"if", "unless", "wenn", "falls", "sofern"};
  /// Recognise German verb-first conditionals ("Kommt er, ...").
  bool verb_first_conditionals = true;
};

FeatureRecord extract_context_features(const Sentence& sentence, const VerbalComplex& vc,
                                       const TMVLabel& label,
                                       const TemporalLexicon& lexicon = TemporalLexicon::builtin(),
                                       const FeatureOptions& options = {});

inline constexpr const char* kFeatureHeader =
    "sentence_id\tvc_token_indices\tmain_verb_lemma\tpattern\ttense_label\tmood\tvoice\t"
    "subject_lemma\tsubject_determiner\tsubject_number\ttemporal\tconditional";

std::string format_feature_row(const FeatureRecord& r);
/// One JSON object (single line).
std::string format_feature_json(const FeatureRecord& r);

}  // namespace tmv
