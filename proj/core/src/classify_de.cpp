#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "tmv/classify.hpp"
#include "tmv/morph.hpp"
#include "tmv/tagset.hpp"

namespace tmv {

namespace {

using tags::VerbForm;

enum class Kind { kSimple, kPerfect, kFuture, kFuturePerfect };

// [kind][tense: pres, past][mood: ind, subj]
constexpr std::array<std::array<std::array<Tense, 2>, 2>, 4> kGermanTenses = {{
    {{{Tense::kPraesens, Tense::kKonjunktivIPresent},
      {Tense::kPraeteritum, Tense::kKonjunktivIIPresent}}},
    {{{Tense::kPerfekt, Tense::kKonjunktivIPast},
      {Tense::kPlusquamperfekt, Tense::kKonjunktivIIPast}}},
    {{{Tense::kFuturI, Tense::kKonjunktivIPresent},
      {Tense::kPraeteritum, Tense::kKonjunktivIIPresent}}},
    {{{Tense::kFuturII, Tense::kKonjunktivIPast},
      {Tense::kPlusquamperfekt, Tense::kKonjunktivIIPast}}},
}};

// Base verbs whose perfect is built with sein. Particle and prefix verbs
// (zurücktreten, ankommen) match by suffix.
constexpr std::array<std::string_view, 34> kSeinVerbs = {
    "sein",    "werden",  "bleiben",  "gehen",    "kommen",   "fahren",   "fliegen",
    "laufen",  "rennen",  "reisen",   "sterben",  "geschehen", "passieren", "gelingen",
    "wachsen", "fallen",  "steigen",  "sinken",   "treten",   "springen", "folgen",
    "begegnen", "erscheinen", "verschwinden", "entstehen", "wandern", "eilen", "fliehen",
    "schmelzen", "platzen", "aufwachen", "einschlafen", "weichen", "gleiten",
};

struct TenseMood {
  std::optional<MorphTense> tense;
  std::optional<MorphMood> mood;
};

TenseMood from_features(const Token& t) {
  TenseMood tm;
  if (t.morph.has("Tense", "Pres") || t.morph.has_bare("pres")) tm.tense = MorphTense::kPresent;
  if (t.morph.has("Tense", "Past") || t.morph.has("Tense", "Prät") || t.morph.has_bare("past")) {
    tm.tense = MorphTense::kPast;
  }
  if (t.morph.has("Mood", "Ind") || t.morph.has_bare("ind")) tm.mood = MorphMood::kIndicative;
  if (t.morph.has("Mood", "Sub") || t.morph.has("Mood", "Subj") || t.morph.has_bare("subj")) {
    tm.mood = MorphMood::kSubjunctive;
  }
  if (t.morph.has("Mood", "Imp") || t.morph.has_bare("imp")) tm.mood = MorphMood::kImperative;
  return tm;
}

const std::set<MorphReading>& lexicon_readings(const Token& t, const MorphFallbackLexicon& lex) {
  const auto& direct = lex.lookup(Language::kGerman, t.form, t.pos);
  if (!direct.empty() || !t.pos.empty()) return direct;
  const auto& aux = lex.lookup(Language::kGerman, t.form, "VAFIN");
  if (!aux.empty()) return aux;
  return lex.lookup(Language::kGerman, t.form, "VMFIN");
}

// Resolves tense and mood of the finite verb: features first, then the
// fallback lexicon (indicative preferred among ambiguous readings), then
// present indicative.
TenseMood finite_tense_mood(const Token& t, const MorphFallbackLexicon& lex, std::uint32_t& flags) {
  TenseMood tm = from_features(t);
  if (tm.mood == MorphMood::kImperative) {
    tm.tense = MorphTense::kPresent;
    return tm;
  }
  if (tm.tense && tm.mood) return tm;
  const auto& readings = lexicon_readings(t, lex);
  std::vector<MorphReading> candidates;
  for (const auto& r : readings) {
    if (tm.tense && r.tense != *tm.tense) continue;
    if (tm.mood && r.mood != *tm.mood) continue;
    candidates.push_back(r);
  }
  if (!candidates.empty()) {
    auto pick = std::find_if(candidates.begin(), candidates.end(),
                             [](const MorphReading& r) { return r.mood == MorphMood::kIndicative; });
    const MorphReading chosen = pick != candidates.end() ? *pick : candidates.front();
    tm.tense = chosen.tense;
    tm.mood = chosen.mood;
    flags |= kFlagLexiconFallback;
    return tm;
  }
  if (!tm.tense || !tm.mood) flags |= kFlagNoMorphology;
  if (!tm.tense) tm.tense = MorphTense::kPresent;
  if (!tm.mood) tm.mood = MorphMood::kIndicative;
  return tm;
}

bool is_modal_lemma(const std::string& l) {
  return l == "können" || l == "müssen" || l == "dürfen" || l == "sollen" || l == "wollen" ||
         l == "mögen" || l == "möchten";
}

}  // namespace

bool selects_sein_perfect(std::string_view lemma) {
  const std::string l = to_lower(lemma);
  return std::any_of(kSeinVerbs.begin(), kSeinVerbs.end(), [&](std::string_view base) {
    return l.size() >= base.size() && l.compare(l.size() - base.size(), base.size(), base) == 0;
  });
}

TMVLabel classify_de(const VerbalComplex& vc, const Sentence& sentence,
                     const MorphFallbackLexicon& lexicon) {
  constexpr Language lang = Language::kGerman;
  TMVLabel label;
  label.language = lang;
  label.finiteness = finiteness_of(vc, sentence);
  if (!vc.carried.empty()) label.flags |= kFlagCarriedContext;

  const std::vector<int> chain = vc.effective_chain();
  auto tok = [&](std::size_t k) -> const Token& { return sentence.at(chain[k]); };
  auto lemma = [&](std::size_t k) { return tags::lemma_of(tok(k), lang); };
  auto form = [&](std::size_t k) { return tags::verb_form(tok(k), lang); };
  auto is_werden_participle = [&](std::size_t k) {
    return lemma(k) == "werden" && form(k) == VerbForm::kParticiple;
  };
  auto is_infinitive = [&](std::size_t k) {
    return form(k) == VerbForm::kInfinitive || form(k) == VerbForm::kZuInfinitive;
  };
  // werden (any non-finite form) directly above a participle.
  auto passive_below = [&](std::size_t from) {
    for (std::size_t k = from; k + 1 < chain.size(); ++k) {
      if (lemma(k) == "werden" && form(k + 1) == VerbForm::kParticiple) return true;
    }
    return false;
  };

  if (label.finiteness != Finiteness::kFinite || chain.empty()) {
    label.tense = Tense::kInfinitive;
    label.voice = passive_below(0) ? Voice::kPassive : Voice::kActive;
    return label;
  }

  const TenseMood tm = finite_tense_mood(tok(0), lexicon, label.flags);
  if (tm.mood == MorphMood::kImperative || form(0) == VerbForm::kImperative) {
    label.tense = Tense::kPraesens;
    label.mood = Mood::kImperative;
    label.voice = passive_below(0) ? Voice::kPassive : Voice::kActive;
    return label;
  }

  Kind kind = Kind::kSimple;
  bool passive = false;
  const std::string top = lemma(0);
  const std::size_t n = chain.size();
  if (n >= 2) {
    if (top == "werden") {
      if (is_infinitive(1)) {
        const std::string next = lemma(1);
        if ((next == "haben" || next == "sein") && n >= 3 && form(2) == VerbForm::kParticiple) {
          kind = Kind::kFuturePerfect;
          passive = is_werden_participle(2) && n >= 4;
        } else {
          kind = Kind::kFuture;
          passive = passive_below(1);
        }
      } else if (form(1) == VerbForm::kParticiple) {
        passive = true;
      } else {
        label.flags |= kFlagLowConfidence;
      }
    } else if (top == "haben" || top == "sein") {
      if (form(1) == VerbForm::kParticiple) {
        if (is_werden_participle(1) && n >= 3) {
          kind = Kind::kPerfect;
          passive = true;
        } else if (top == "sein" && n == 2 && !selects_sein_perfect(lemma(1))) {
          passive = true;
          label.flags |= kFlagStatalPassive;
        } else {
          kind = Kind::kPerfect;
        }
      } else if (top == "haben" && is_infinitive(1) && is_modal_lemma(lemma(1))) {
        // Ersatzinfinitiv: "hätte lesen können".
        kind = Kind::kPerfect;
      } else {
        label.flags |= kFlagLowConfidence;
      }
    } else if (is_modal_lemma(top) || tags::is_modal_tag(tok(0), lang)) {
      passive = passive_below(1);
      for (std::size_t k = 1; k + 1 < n; ++k) {
        if ((lemma(k) == "haben" || lemma(k) == "sein") && form(k + 1) == VerbForm::kParticiple) {
          label.flags |= kFlagPerfectNonFinite;
        }
      }
    }
  }

  const std::size_t t = *tm.tense == MorphTense::kPast ? 1 : 0;
  const std::size_t m = *tm.mood == MorphMood::kSubjunctive ? 1 : 0;
  if ((kind == Kind::kFuture || kind == Kind::kFuturePerfect) && t == 1 && m == 0) {
    label.flags |= kFlagLowConfidence;  // "wurde lesen" is not a German tense
  }
  label.tense = kGermanTenses[static_cast<std::size_t>(kind)][t][m];
  label.mood = is_konjunktiv(label.tense) ? Mood::kSubjunctive : Mood::kIndicative;
  label.voice = passive ? Voice::kPassive : Voice::kActive;
  return label;
}

}  // namespace tmv
