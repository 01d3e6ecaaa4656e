#include <array>

#include "tmv/classify.hpp"
#include "tmv/morph.hpp"
#include "tmv/tagset.hpp"

namespace tmv {

namespace {

using tags::VerbForm;

enum class Base { kPresent, kPast, kFuture, kConditional };

// [base][perfect][progressive]
constexpr std::array<std::array<std::array<Tense, 2>, 2>, 4> kFiniteTenses = {{
    {{{Tense::kPresentSimple, Tense::kPresentProgressive},
      {Tense::kPresentPerfect, Tense::kPresentPerfectProgressive}}},
    {{{Tense::kPastSimple, Tense::kPastProgressive},
      {Tense::kPastPerfect, Tense::kPastPerfectProgressive}}},
    {{{Tense::kFutureI, Tense::kFutureIProgressive},
      {Tense::kFutureII, Tense::kFutureIIProgressive}}},
    {{{Tense::kConditionalI, Tense::kConditionalIProgressive},
      {Tense::kConditionalII, Tense::kConditionalIIProgressive}}},
}};

Base modal_base(const std::string& lemma, const std::string& form, ModalPreterite preterite) {
  if (lemma == "will" || lemma == "shall" || form == "'ll" || form == "wo" || form == "sha") {
    return Base::kFuture;
  }
  if (lemma == "would" || form == "'d") return Base::kConditional;
  if (lemma == "could" || lemma == "might" || lemma == "should") {
    return preterite == ModalPreterite::kPast ? Base::kPast : Base::kPresent;
  }
  // Parsers that lemmatise would -> will, could -> can keep the form.
  if (form == "would") return Base::kConditional;
  if (form == "could" || form == "might" || form == "should") {
    return preterite == ModalPreterite::kPast ? Base::kPast : Base::kPresent;
  }
  return Base::kPresent;
}

}  // namespace

std::optional<ModalPreterite> parse_modal_preterite(std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "present") return ModalPreterite::kPresent;
  if (t == "past") return ModalPreterite::kPast;
  return std::nullopt;
}

TMVLabel classify_en(const VerbalComplex& vc, const Sentence& sentence,
                     const ClassifierOptions& options) {
  constexpr Language lang = Language::kEnglish;
  TMVLabel label;
  label.language = lang;
  label.finiteness = finiteness_of(vc, sentence);

  const std::vector<int> chain = vc.effective_chain();
  if (!vc.carried.empty()) label.flags |= kFlagCarriedContext;
  auto tok = [&](std::size_t k) -> const Token& { return sentence.at(chain[k]); };
  auto lemma = [&](std::size_t k) { return tags::lemma_of(tok(k), lang); };
  auto form_of = [&](std::size_t k) { return tags::verb_form(tok(k), lang); };

  const bool finite = label.finiteness == Finiteness::kFinite;
  Base base = Base::kPresent;
  std::size_t start = 0;
  if (finite && !chain.empty()) {
    const Token& head = tok(0);
    const std::string head_lemma = lemma(0);
    if (head.morph.has("Mood", "Imp") || form_of(0) == VerbForm::kInfinitive) {
      label.mood = Mood::kImperative;
    } else if (tags::is_modal_tag(head, lang)) {
      base = modal_base(head_lemma, to_lower(head.form), options.modal_preterite);
      start = 1;
    } else if (head_lemma == "be" && chain.size() >= 3 && lemma(1) == "go" &&
               form_of(1) == VerbForm::kGerund) {
      base = Base::kFuture;
      start = 2;
    } else {
      if (head.pos == "VBD" || (head.pos.empty() && head.morph.has("Tense", "Past"))) {
        base = Base::kPast;
      } else if (head.pos != "VBZ" && head.pos != "VBP" && !head.morph.has("Tense", "Pres")) {
        label.flags |= kFlagLowConfidence;
      }
      if (head_lemma == "do" && chain.size() >= 2 && form_of(1) == VerbForm::kInfinitive) start = 1;
    }
  }

  bool perfect = false;
  bool progressive = false;
  bool passive = false;
  for (std::size_t k = start; k + 1 < chain.size(); ++k) {
    const std::string l = lemma(k);
    const VerbForm next = form_of(k + 1);
    const bool next_is_main = k + 2 == chain.size();
    if (l == "have" && next == VerbForm::kParticiple && !perfect && !progressive && !passive) {
      perfect = true;
    } else if (l == "be" && next == VerbForm::kGerund && !progressive && !passive) {
      progressive = true;
    } else if ((l == "be" || l == "get") && next == VerbForm::kParticiple && next_is_main &&
               !passive) {
      passive = true;
    } else {
      label.flags |= kFlagLowConfidence;
    }
  }

  label.voice = passive ? Voice::kPassive : Voice::kActive;
  label.progressive = progressive;
  switch (label.finiteness) {
    case Finiteness::kFinite:
      label.tense = kFiniteTenses[static_cast<std::size_t>(base)][perfect][progressive];
      break;
    case Finiteness::kGerund:
      label.tense = Tense::kGerund;
      break;
    case Finiteness::kToInfinitive:
      label.tense = Tense::kToInfinitive;
      break;
    case Finiteness::kBareInfinitive:
      label.tense = Tense::kBareInfinitive;
      break;
    case Finiteness::kParticiple:
      label.tense = Tense::kBareInfinitive;
      label.flags |= kFlagParticipleClause;
      break;
  }
  if (!finite && perfect) label.flags |= kFlagPerfectNonFinite;
  return label;
}

}  // namespace tmv
