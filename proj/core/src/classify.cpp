#include "tmv/classify.hpp"

namespace tmv {

TMVLabel classify(const VerbalComplex& vc, const Sentence& sentence,
                  const ClassifierOptions& options, const MorphFallbackLexicon& lexicon) {
  if (vc.language == Language::kEnglish) return classify_en(vc, sentence, options);
  return classify_de(vc, sentence, lexicon);
}

}  // namespace tmv
