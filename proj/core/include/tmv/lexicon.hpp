#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "tmv/types.hpp"

namespace tmv {

enum class MorphTense { kPresent, kPast };
enum class MorphMood { kIndicative, kSubjunctive, kImperative };

struct MorphReading {
  MorphTense tense;
  MorphMood mood;
  auto operator<=>(const MorphReading&) const = default;
};

/// Tense/mood readings for finite auxiliary and modal forms, consulted
/// when a parse carries no morphological features.
///
/// File format (TSV, `#` comments): `language form pos tense mood`, with
/// tense in {Pres, Past} and mood in {Ind, Subj, Imp}. Forms are matched
/// case-insensitively. Only auxiliary/modal tags are accepted.
class MorphFallbackLexicon {
 public:
  MorphFallbackLexicon() = default;

  /// The compiled-in default covering sein/haben/werden and the modals.
  static const MorphFallbackLexicon& builtin();

  static MorphFallbackLexicon load(std::istream& in);
  static MorphFallbackLexicon load(std::string_view text);
  static MorphFallbackLexicon load_file(const std::string& path);

  void add(Language lang, std::string_view form, std::string_view pos, MorphReading reading);

  /// Empty set for unknown keys.
  [[nodiscard]] const std::set<MorphReading>& lookup(Language lang, std::string_view form,
                                                     std::string_view pos) const;
  [[nodiscard]] std::size_t size() const;

  /// True for the tags an entry may carry.
  static bool is_auxiliary_tag(std::string_view pos);

 private:
  using Key = std::tuple<Language, std::string, std::string>;
  std::map<Key, std::set<MorphReading>> entries_;
};

}  // namespace tmv
