#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmv/alignment.hpp"
#include "tmv/annotated_io.hpp"
#include "tmv/diagnostics.hpp"

namespace tmv {

enum class MatchingMode { kGreedy, kExhaustive };

/// Which links make two complexes candidates for pairing.
enum class PairCriterion {
  kAnyLink,   // at least one link between members
  kMainVerb,  // the two main verbs must be linked
};

std::optional<MatchingMode> parse_matching(std::string_view text);
std::optional<PairCriterion> parse_criterion(std::string_view text);

struct PairingOptions {
  MatchingMode matching = MatchingMode::kGreedy;
  PairCriterion criterion = PairCriterion::kAnyLink;
};

/// Largest side for which exhaustive matching is attempted.
inline constexpr std::size_t kExhaustiveLimit = 8;

struct VCPair {
  std::string pair_id;
  LabeledVC en;
  LabeledVC de;
  int link_count = 0;
  bool main_verb_aligned = false;
};

struct PairingResult {
  std::vector<VCPair> pairs;  // ordered by English leftmost index
  std::vector<LabeledVC> unpaired_en;
  std::vector<LabeledVC> unpaired_de;
  std::size_t dropped_links = 0;
  /// Exhaustive mode fell back to greedy because a side exceeded the limit.
  bool fell_back = false;
};

/// Link-count weight w(e, d) for every English/German complex.
std::vector<std::vector<int>> link_weights(const std::vector<LabeledVC>& en,
                                           const std::vector<LabeledVC>& de,
                                           const AlignmentSet& links);

/// Pairs complexes of one aligned sentence pair. Links outside either
/// sentence (`en_length`, `de_length`) are dropped and counted.
PairingResult pair_vcs(const std::vector<LabeledVC>& en, const std::vector<LabeledVC>& de,
                       const AlignmentSet& links, int en_length, int de_length,
                       const PairingOptions& options = {});

/// Matching as (english index, german index) pairs.
using Matching = std::vector<std::pair<int, int>>;

/// Greedy selection on a weight matrix. `main_aligned[e][d]` breaks ties
/// first, then the English and German leftmost positions (`en_order`,
/// `de_order`, smaller first).
Matching greedy_matching(const std::vector<std::vector<int>>& weights,
                         const std::vector<std::vector<bool>>& main_aligned,
                         const std::vector<int>& en_order, const std::vector<int>& de_order);

/// Maximum total weight over all matchings that use only edges of weight
/// >= 1; ties resolved by more main-verb-aligned edges, then the
/// lexicographically smallest assignment.
Matching exhaustive_matching(const std::vector<std::vector<int>>& weights,
                             const std::vector<std::vector<bool>>& main_aligned);

/// Column header of the pair dump TSV.
inline constexpr const char* kPairHeader =
    "pair_id\ten_label\tde_label\ten_tokens\tde_tokens\tlink_count\t"
    "main_verb_aligned\ten_mood\ten_voice\tde_mood\tde_voice\t"
    "en_finiteness\tde_finiteness\ten_lemma\tde_lemma";

std::string format_pair_row(const VCPair& pair, const Sentence& en, const Sentence& de);

/// A pair read back from a dump; sentences are not available then.
struct PairRecord {
  std::string pair_id;
  TMVLabel en;
  TMVLabel de;
  std::vector<int> en_tokens;
  std::vector<int> de_tokens;
  int link_count = 0;
  bool main_verb_aligned = false;
  std::string en_lemma;
  std::string de_lemma;
};

PairRecord to_record(const VCPair& pair, const Sentence& en, const Sentence& de);

struct PairReadResult {
  std::vector<PairRecord> records;
  DiagnosticLog log;
};

/// Reads the dump. The six leading columns are required; the rest fill
/// in mood/voice/finiteness when present.
PairReadResult read_pairs(std::istream& in);

}  // namespace tmv
