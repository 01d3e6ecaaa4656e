#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmv/types.hpp"
#include "tmv/verbal_complex.hpp"

namespace tmv {

/// Tense inventory of both languages. English and German values never mix
/// within one label; `language_of` recovers the side.
enum class Tense : std::uint8_t {
  // English
  kPresentSimple,
  kPresentProgressive,
  kPresentPerfect,
  kPresentPerfectProgressive,
  kPastSimple,
  kPastProgressive,
  kPastPerfect,
  kPastPerfectProgressive,
  kFutureI,
  kFutureIProgressive,
  kFutureII,
  kFutureIIProgressive,
  kConditionalI,
  kConditionalIProgressive,
  kConditionalII,
  kConditionalIIProgressive,
  kGerund,
  kToInfinitive,
  kBareInfinitive,
  // German
  kPraesens,
  kPraeteritum,
  kPerfekt,
  kPlusquamperfekt,
  kFuturI,
  kFuturII,
  kKonjunktivIPresent,
  kKonjunktivIPast,
  kKonjunktivIIPresent,
  kKonjunktivIIPast,
  kInfinitive,
};

enum class Mood : std::uint8_t { kIndicative, kSubjunctive, kImperative };
enum class Voice : std::uint8_t { kActive, kPassive };

/// Bit flags attached to a label; none of them changes the label itself.
enum LabelFlag : std::uint32_t {
  kFlagNone = 0,
  kFlagLowConfidence = 1u << 0,   // chain did not match a known pattern
  kFlagStatalPassive = 1u << 1,   // sein + participle read as passive
  kFlagLexiconFallback = 1u << 2, // tense/mood came from the fallback lexicon
  kFlagNoMorphology = 1u << 3,    // no features and no lexicon entry
  kFlagCarriedContext = 1u << 4,  // auxiliaries borrowed from a conjunct
  kFlagPerfectNonFinite = 1u << 5,
  kFlagParticipleClause = 1u << 6,
};

struct TMVLabel {
  Language language = Language::kEnglish;
  Tense tense = Tense::kPresentSimple;
  Mood mood = Mood::kIndicative;
  Voice voice = Voice::kActive;
  Finiteness finiteness = Finiteness::kFinite;
  bool progressive = false;
  std::uint32_t flags = kFlagNone;

  [[nodiscard]] bool has(LabelFlag f) const { return (flags & f) != 0; }

  /// Equality on the annotated categories only; flags are ignored.
  friend bool operator==(const TMVLabel& a, const TMVLabel& b) {
    return a.language == b.language && a.tense == b.tense && a.mood == b.mood &&
           a.voice == b.voice && a.finiteness == b.finiteness &&
           a.progressive == b.progressive;
  }
};

Language language_of(Tense t);
bool is_konjunktiv(Tense t);

/// Identifier used in TSV files, e.g. "presentPerfect", "konjunktivII_past".
std::string_view tense_name(Tense t);
std::optional<Tense> parse_tense_name(std::string_view name);

/// Figure label, e.g. "presPerfProg", "Konj II past", "Pluperfekt".
std::string_view display_label(Tense t);
std::string_view display_label(const TMVLabel& label);
std::optional<Tense> parse_display_label(std::string_view label);

/// Accepts identifiers, figure labels and grammar-book names ("present
/// perfect", "Futur I", "Plusquamperfekt"), case-insensitively.
std::optional<Tense> lookup_tense(std::string_view any_name);

std::string_view to_string(Mood m);
std::string_view to_string(Voice v);
std::optional<Mood> parse_mood(std::string_view text);
std::optional<Voice> parse_voice(std::string_view text);

/// All tenses of one language in figure-axis order.
std::span<const Tense> tense_axis(Language lang);

std::vector<std::string> describe_flags(std::uint32_t flags);

}  // namespace tmv
