#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tmv/annotated_io.hpp"
#include "tmv/label.hpp"
#include "tmv/pairing.hpp"

namespace tmv {

/// Non-negative exact fraction, always reduced. 0/0 is not representable;
/// an empty row has frequency 0/1.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational of(std::uint64_t num, std::uint64_t den);
  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] std::string str() const;             // "3/7"
  [[nodiscard]] std::string fixed(int digits = 6) const;  // "0.428571"
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Direction { kEnDe, kDeEn };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

enum class FinitenessFilter { kAny, kFinite, kNonFinite };

/// Predicate over one label.
struct LabelFilter {
  std::optional<Mood> mood;
  std::optional<Voice> voice;
  FinitenessFilter finiteness = FinitenessFilter::kAny;
  /// Imperatives are left out unless asked for.
  bool include_imperative = false;

  [[nodiscard]] bool matches(const TMVLabel& label) const;
  /// Stable text form, e.g. "mood=indicative;voice=active;finiteness=finite".
  [[nodiscard]] std::string describe() const;
  friend bool operator==(const LabelFilter&, const LabelFilter&) = default;
};

class MergeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plain count table with display labels, the common shape behind every
/// emitted report.
struct CountTable {
  std::string title;
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<std::vector<std::uint64_t>> counts;

  [[nodiscard]] std::uint64_t row_total(std::size_t r) const;
  [[nodiscard]] std::uint64_t total() const;
  [[nodiscard]] Rational row_freq(std::size_t r, std::size_t c) const;
  /// Same table with rows and columns swapped.
  [[nodiscard]] CountTable transposed() const;
};

/// How source labels map to target labels over aligned pairs.
class CorrespondenceMatrix {
 public:
  explicit CorrespondenceMatrix(Direction direction, LabelFilter source_filter = {},
                                LabelFilter target_filter = {},
                                std::optional<std::set<Tense>> row_filter = std::nullopt);

  /// Counts one pair; returns false if a filter rejected it.
  bool add(const TMVLabel& en, const TMVLabel& de);
  bool add(const PairRecord& record) { return add(record.en, record.de); }

  void add_corpus_id(std::string id) { corpus_ids_.insert(std::move(id)); }

  [[nodiscard]] Direction direction() const { return direction_; }
  [[nodiscard]] std::span<const Tense> row_labels() const;
  [[nodiscard]] std::span<const Tense> column_labels() const;
  [[nodiscard]] std::uint64_t count(Tense row, Tense column) const;
  [[nodiscard]] std::uint64_t row_total(Tense row) const;
  [[nodiscard]] std::uint64_t total() const;
  [[nodiscard]] Rational row_freq(Tense row, Tense column) const;
  [[nodiscard]] bool row_empty(Tense row) const { return row_total(row) == 0; }
  [[nodiscard]] const std::set<std::string>& corpus_ids() const { return corpus_ids_; }
  [[nodiscard]] const LabelFilter& source_filter() const { return source_filter_; }
  [[nodiscard]] const LabelFilter& target_filter() const { return target_filter_; }
  [[nodiscard]] const std::optional<std::set<Tense>>& row_filter() const { return row_filter_; }

  /// Display-label table. Rows are restricted to the row filter when one
  /// is set. With `coarse`, Konjunktiv I/II present and past collapse into
  /// one column each.
  [[nodiscard]] CountTable table(bool coarse = false) const;

  friend CorrespondenceMatrix merge(const CorrespondenceMatrix& a, const CorrespondenceMatrix& b);
  friend bool operator==(const CorrespondenceMatrix&, const CorrespondenceMatrix&) = default;

 private:
  [[nodiscard]] std::size_t row_pos(Tense t) const;
  [[nodiscard]] std::size_t col_pos(Tense t) const;

  Direction direction_;
  LabelFilter source_filter_;
  LabelFilter target_filter_;
  std::optional<std::set<Tense>> row_filter_;
  std::vector<std::uint64_t> counts_;  // row-major
  std::set<std::string> corpus_ids_;
};

/// Relative frequency of tense labels among the complexes a filter keeps.
class TenseDistribution {
 public:
  TenseDistribution(Language language, LabelFilter filter = {}, std::string corpus_id = {});

  bool add(const TMVLabel& label);

  [[nodiscard]] Language language() const { return language_; }
  [[nodiscard]] const LabelFilter& filter() const { return filter_; }
  [[nodiscard]] const std::set<std::string>& corpus_ids() const { return corpus_ids_; }
  [[nodiscard]] std::span<const Tense> labels() const;
  [[nodiscard]] std::uint64_t count(Tense t) const;
  [[nodiscard]] std::uint64_t total() const;
  [[nodiscard]] Rational freq(Tense t) const;
  [[nodiscard]] bool empty() const { return total() == 0; }

  /// One row named after the corpus over the label axis.
  [[nodiscard]] CountTable table(bool coarse = false) const;

  friend TenseDistribution merge(const TenseDistribution& a, const TenseDistribution& b);
  friend bool operator==(const TenseDistribution&, const TenseDistribution&) = default;

 private:
  Language language_;
  LabelFilter filter_;
  std::set<std::string> corpus_ids_;
  std::vector<std::uint64_t> counts_;
};

/// Tense counts of one main-verb lemma.
class LemmaProfile {
 public:
  explicit LemmaProfile(std::string lemma, std::optional<Voice> voice = std::nullopt);

  bool add(std::string_view lemma, const TMVLabel& label);

  [[nodiscard]] const std::string& lemma() const { return lemma_; }
  [[nodiscard]] const std::optional<Voice>& voice() const { return voice_; }
  [[nodiscard]] const std::map<Tense, std::uint64_t>& counts() const { return counts_; }
  [[nodiscard]] std::uint64_t count(Tense t) const;
  [[nodiscard]] std::uint64_t total() const;

  friend LemmaProfile merge(const LemmaProfile& a, const LemmaProfile& b);
  friend bool operator==(const LemmaProfile&, const LemmaProfile&) = default;

 private:
  std::string lemma_;
  std::optional<Voice> voice_;
  std::map<Tense, std::uint64_t> counts_;
};

struct FinitenessRatio {
  std::uint64_t non_finite = 0;
  std::uint64_t total = 0;
  Rational ratio;  // 0/1 for empty input
  void add(const TMVLabel& label);
  friend FinitenessRatio merge(const FinitenessRatio& a, const FinitenessRatio& b);
  friend bool operator==(const FinitenessRatio&, const FinitenessRatio&) = default;
};

CorrespondenceMatrix correspondence_matrix(std::span<const PairRecord> pairs, Direction direction,
                                           std::optional<std::set<Tense>> row_filter = std::nullopt,
                                           LabelFilter source_filter = {},
                                           LabelFilter target_filter = {});

TenseDistribution tense_distribution(std::span<const TMVLabel> labels, Language language,
                                     const LabelFilter& filter, std::string corpus_id = {});

FinitenessRatio finiteness_ratio(std::span<const TMVLabel> labels);

LemmaProfile lemma_tense_profile(std::span<const AnnotatedRecord> records, std::string_view lemma,
                                 std::optional<Voice> voice = std::nullopt);

}  // namespace tmv
