#pragma once

#include <string_view>

#include "tmv/label.hpp"
#include "tmv/lexicon.hpp"
#include "tmv/token.hpp"
#include "tmv/verbal_complex.hpp"

namespace tmv {

/// How could/might/should are placed on the time axis.
enum class ModalPreterite { kPresent, kPast };

std::optional<ModalPreterite> parse_modal_preterite(std::string_view text);

struct ClassifierOptions {
  ModalPreterite modal_preterite = ModalPreterite::kPresent;
};

TMVLabel classify_en(const VerbalComplex& vc, const Sentence& sentence,
                     const ClassifierOptions& options = {});

TMVLabel classify_de(const VerbalComplex& vc, const Sentence& sentence,
                     const MorphFallbackLexicon& lexicon = MorphFallbackLexicon::builtin());

/// Dispatches on `vc.language`.
TMVLabel classify(const VerbalComplex& vc, const Sentence& sentence,
                  const ClassifierOptions& options = {},
                  const MorphFallbackLexicon& lexicon = MorphFallbackLexicon::builtin());

/// German verbs that build their perfect with sein (gehen, kommen,
/// zurücktreten, ...). Matching is by suffix so particle verbs are covered.
bool selects_sein_perfect(std::string_view lemma);

}  // namespace tmv
