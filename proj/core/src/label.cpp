#include "tmv/label.hpp"

#include <array>

#include "tmv/morph.hpp"

namespace tmv {

namespace {

struct TenseInfo {
  Tense tense;
  std::string_view name;
  std::string_view display;
  // Grammar-book spellings accepted by lookup_tense.
  std::array<std::string_view, 3> aliases;
};

constexpr std::array<TenseInfo, 30> kTenses = {{
    {Tense::kPresentSimple, "presentSimple", "pres", {"present simple", "present", "simple present"}},
    {Tense::kPresentProgressive, "presentProgressive", "presProg", {"present progressive", "", ""}},
    {Tense::kPresentPerfect, "presentPerfect", "presPerf", {"present perfect", "", ""}},
    {Tense::kPresentPerfectProgressive, "presentPerfectProgressive", "presPerfProg",
     {"present perfect progressive", "", ""}},
    {Tense::kPastSimple, "pastSimple", "past", {"past simple", "simple past", "past tense"}},
    {Tense::kPastProgressive, "pastProgressive", "pastProg", {"past progressive", "", ""}},
    {Tense::kPastPerfect, "pastPerfect", "pastPerf", {"past perfect", "", ""}},
    {Tense::kPastPerfectProgressive, "pastPerfectProgressive", "pastPerfProg",
     {"past perfect progressive", "", ""}},
    {Tense::kFutureI, "futureI", "futureI", {"future i", "future", "future tense"}},
    {Tense::kFutureIProgressive, "futureIProgressive", "futureIProg", {"future i progressive", "", ""}},
    {Tense::kFutureII, "futureII", "futureII", {"future ii", "future perfect", ""}},
    {Tense::kFutureIIProgressive, "futureIIProgressive", "futureIIProg",
     {"future ii progressive", "", ""}},
    {Tense::kConditionalI, "conditionalI", "condI", {"conditional i", "conditional1", ""}},
    {Tense::kConditionalIProgressive, "conditionalIProgressive", "condIProg",
     {"conditional i progressive", "conditional1pr", ""}},
    {Tense::kConditionalII, "conditionalII", "condII", {"conditional ii", "conditional2", ""}},
    {Tense::kConditionalIIProgressive, "conditionalIIProgressive", "condIIProg",
     {"conditional ii progressive", "conditional2pr", ""}},
    {Tense::kGerund, "gerund", "gerund", {"", "", ""}},
    {Tense::kToInfinitive, "toInfinitive", "toInfinitive", {"to-infinitive", "to infinitive", ""}},
    {Tense::kBareInfinitive, "bareInfinitive", "bareInfinitive", {"bare infinitive", "", ""}},
    {Tense::kPraesens, "praesens", "Präsens", {"praesens", "präsens", ""}},
    {Tense::kPraeteritum, "praeteritum", "Präteritum", {"präteritum", "", ""}},
    {Tense::kPerfekt, "perfekt", "Perfekt", {"", "", ""}},
    {Tense::kPlusquamperfekt, "plusquamperfekt", "Pluperfekt", {"plusquamperfekt", "pluperfekt", ""}},
    {Tense::kFuturI, "futurI", "Futur I", {"futur i", "", ""}},
    {Tense::kFuturII, "futurII", "Futur II", {"futur ii", "", ""}},
    {Tense::kKonjunktivIPresent, "konjunktivI_present", "Konj I pres",
     {"konjunktiv i", "konjunktiv i present", ""}},
    {Tense::kKonjunktivIPast, "konjunktivI_past", "Konj I past", {"konjunktiv i past", "", ""}},
    {Tense::kKonjunktivIIPresent, "konjunktivII_present", "Konj II pres",
     {"konjunktiv ii", "konjunktiv ii present", ""}},
    {Tense::kKonjunktivIIPast, "konjunktivII_past", "Konj II past", {"konjunktiv ii past", "", ""}},
    {Tense::kInfinitive, "infinitive", "Infinitive", {"", "", ""}},
}};

const TenseInfo& info(Tense t) { return kTenses[static_cast<std::size_t>(t)]; }

// Axis order of the correspondence figures; bareInfinitive and Infinitive
// close the respective axis.
constexpr std::array<Tense, 19> kEnAxis = {
    Tense::kPresentSimple,    Tense::kPresentProgressive,
    Tense::kPastSimple,       Tense::kPastProgressive,
    Tense::kPresentPerfect,   Tense::kPresentPerfectProgressive,
    Tense::kPastPerfect,      Tense::kPastPerfectProgressive,
    Tense::kFutureI,          Tense::kFutureIProgressive,
    Tense::kFutureII,         Tense::kFutureIIProgressive,
    Tense::kConditionalI,     Tense::kConditionalIProgressive,
    Tense::kConditionalII,    Tense::kConditionalIIProgressive,
    Tense::kGerund,           Tense::kToInfinitive,
    Tense::kBareInfinitive,
};

constexpr std::array<Tense, 11> kDeAxis = {
    Tense::kPraesens,           Tense::kPraeteritum,          Tense::kPerfekt,
    Tense::kPlusquamperfekt,    Tense::kFuturI,               Tense::kFuturII,
    Tense::kKonjunktivIPresent, Tense::kKonjunktivIPast,      Tense::kKonjunktivIIPresent,
    Tense::kKonjunktivIIPast,   Tense::kInfinitive,
};

}  // namespace

Language language_of(Tense t) {
  return t < Tense::kPraesens ? Language::kEnglish : Language::kGerman;
}

bool is_konjunktiv(Tense t) {
  return t == Tense::kKonjunktivIPresent || t == Tense::kKonjunktivIPast ||
         t == Tense::kKonjunktivIIPresent || t == Tense::kKonjunktivIIPast;
}

std::string_view tense_name(Tense t) { return info(t).name; }

std::optional<Tense> parse_tense_name(std::string_view name) {
  for (const auto& i : kTenses) {
    if (i.name == name) return i.tense;
  }
  return std::nullopt;
}

std::string_view display_label(Tense t) { return info(t).display; }

std::string_view display_label(const TMVLabel& label) { return display_label(label.tense); }

std::optional<Tense> parse_display_label(std::string_view label) {
  for (const auto& i : kTenses) {
    if (i.display == label) return i.tense;
  }
  return std::nullopt;
}

std::optional<Tense> lookup_tense(std::string_view any_name) {
  const std::string key = to_lower(any_name);
  for (const auto& i : kTenses) {
    if (to_lower(i.name) == key || to_lower(i.display) == key) return i.tense;
    for (auto a : i.aliases) {
      if (!a.empty() && a == key) return i.tense;
    }
  }
  return std::nullopt;
}

std::string_view to_string(Mood m) {
  switch (m) {
    case Mood::kIndicative: return "indicative";
    case Mood::kSubjunctive: return "subjunctive";
    case Mood::kImperative: return "imperative";
  }
  return "indicative";
}

std::string_view to_string(Voice v) { return v == Voice::kActive ? "active" : "passive"; }

std::optional<Mood> parse_mood(std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "indicative" || t == "ind") return Mood::kIndicative;
  if (t == "subjunctive" || t == "subj" || t == "konjunktiv") return Mood::kSubjunctive;
  if (t == "imperative" || t == "imp") return Mood::kImperative;
  return std::nullopt;
}

std::optional<Voice> parse_voice(std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "active" || t == "act") return Voice::kActive;
  if (t == "passive" || t == "pass") return Voice::kPassive;
  return std::nullopt;
}

std::span<const Tense> tense_axis(Language lang) {
  if (lang == Language::kEnglish) return kEnAxis;
  return kDeAxis;
}

std::vector<std::string> describe_flags(std::uint32_t flags) {
  static constexpr std::pair<LabelFlag, std::string_view> kNames[] = {
      {kFlagLowConfidence, "low_confidence"},     {kFlagStatalPassive, "statal_passive"},
      {kFlagLexiconFallback, "lexicon_fallback"}, {kFlagNoMorphology, "no_morphology"},
      {kFlagCarriedContext, "carried_context"},   {kFlagPerfectNonFinite, "perfect_non_finite"},
      {kFlagParticipleClause, "participle_clause"},
  };
  std::vector<std::string> out;
  for (const auto& [flag, name] : kNames) {
    if (flags & flag) out.emplace_back(name);
  }
  return out;
}

}  // namespace tmv
