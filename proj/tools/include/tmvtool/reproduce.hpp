#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tmv/pipeline.hpp"
#include "tmv/stats.hpp"

namespace tmv::tool {

/// Corpus-scale tables computed from one parsed and aligned parallel corpus.
enum class ReproTable {
  kPresentPerfect,  // presPerf(Prog) -> German, fine columns
  kConditional,     // condI..condIIProg -> German, coarse
  kKonjunktiv,      // English tenses over Konjunktiv I/II
  kNonFinite,       // gerund + to-infinitive -> German, coarse
  kOverall,         // every English tense -> German, coarse
  kFiniteness,      // non-finite share per language
  kDistribution,    // German indicative active finite tenses
  kSein,            // sein: composed past vs Präteritum, active
};

std::string_view to_string(ReproTable t);
std::optional<ReproTable> parse_repro_table(std::string_view text);
const std::vector<ReproTable>& all_repro_tables();

/// Corpora with reference values; kOther has none.
enum class ReferenceCorpus { kNews, kEuroparl, kCrawl, kPattr, kCombined, kOther };

std::string_view to_string(ReferenceCorpus c);
std::optional<ReferenceCorpus> parse_reference_corpus(std::string_view text);

/// One published cell: a row-normalised frequency.
struct ReferenceCell {
  ReproTable table;
  std::string row;
  std::string column;
  double value;
};

std::vector<ReferenceCell> reference_cells(ReferenceCorpus corpus);

/// Streaming accumulator; feed it every sentence pair of the corpus.
class Reproduction {
 public:
  explicit Reproduction(std::string corpus_id);

  void add(const SentencePairResult& r);

  /// Display-label table for one reproduction table.
  [[nodiscard]] CountTable table(ReproTable t) const;

  [[nodiscard]] const FinitenessRatio& en_ratio() const { return en_ratio_; }
  [[nodiscard]] const FinitenessRatio& de_ratio() const { return de_ratio_; }

 private:
  std::string corpus_id_;
  CorrespondenceMatrix present_perfect_;
  CorrespondenceMatrix conditional_;
  CorrespondenceMatrix konjunktiv_;
  CorrespondenceMatrix non_finite_;
  CorrespondenceMatrix overall_;
  FinitenessRatio en_ratio_;
  FinitenessRatio de_ratio_;
  TenseDistribution distribution_;
  LemmaProfile sein_;
};

struct CellCheck {
  ReferenceCell reference;
  std::optional<double> observed;  // nullopt: row has no observations
  [[nodiscard]] bool ok(double tolerance) const;
};

struct OrderingCheck {
  std::string description;
  std::optional<bool> holds;  // nullopt: not enough data
};

struct ReproductionReport {
  std::vector<CellCheck> cells;
  std::vector<OrderingCheck> orderings;
  double tolerance = 0.02;

  [[nodiscard]] std::size_t cells_within() const;
  [[nodiscard]] std::size_t cells_compared() const;
  [[nodiscard]] bool orderings_hold() const;
  void write(std::ostream& out) const;
};

/// Compares the requested tables with the reference values of `corpus`
/// and evaluates the qualitative orderings.
ReproductionReport compare(const Reproduction& repro, ReferenceCorpus corpus,
                           const std::set<ReproTable>& tables, double tolerance = 0.02);

}  // namespace tmv::tool
