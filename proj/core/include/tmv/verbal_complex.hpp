#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmv/token.hpp"

namespace tmv {

enum class Finiteness {
  kFinite,
  kGerund,
  kToInfinitive,
  kBareInfinitive,
  kParticiple,
};

std::string_view to_string(Finiteness f);
std::optional<Finiteness> parse_finiteness(std::string_view text);

/// The verbal tokens of one predicate.
struct VerbalComplex {
  std::string sentence_id;
  Language language = Language::kEnglish;
  /// Surface order; verbs plus infinitival particles (to / zu).
  std::vector<int> members;
  /// Verbal members from the governing verb down to the main verb.
  std::vector<int> chain;
  int main_verb = 0;
  std::optional<int> finite_verb;
  /// Syntactic head of the clause: the chain top, or in UD the predicate
  /// the auxiliaries attach to (which need not be a verb under `cop`).
  int anchor = 0;
  /// Auxiliaries borrowed from a coordinated sibling ("has come and
  /// gone": `gone` carries `has`). Not members; used for labelling only.
  std::vector<int> carried;

  [[nodiscard]] int leftmost() const { return members.empty() ? 0 : members.front(); }
  [[nodiscard]] bool contains(int index) const;
  /// `carried` followed by `chain`.
  [[nodiscard]] std::vector<int> effective_chain() const;

  friend bool operator==(const VerbalComplex&, const VerbalComplex&) = default;
};

/// Verbal complexes of a sentence ordered by leftmost member.
std::vector<VerbalComplex> extract_vcs(const Sentence& sentence, Scheme scheme);

Finiteness finiteness_of(const VerbalComplex& vc, const Sentence& sentence);

/// Comma-joined member indices, e.g. "3,4".
std::string join_indices(const std::vector<int>& indices);

}  // namespace tmv
