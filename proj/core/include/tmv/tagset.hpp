#pragma once

#include <string>
#include <string_view>

#include "tmv/token.hpp"

namespace tmv::tags {

/// Coarse verb-form class read off Penn Treebank / STTS tags, with the UD
/// VerbForm feature as fallback.
enum class VerbForm {
  kNone,
  kFinite,        // VBZ VBP VBD MD / V?FIN
  kImperative,    // V?IMP
  kInfinitive,    // VB / V?INF
  kZuInfinitive,  // VVIZU
  kGerund,        // VBG (present participle)
  kParticiple,    // VBN / V?PP
};

bool is_verbal(const Token& tok, Language lang);
bool is_finite(const Token& tok, Language lang);
bool is_modal_tag(const Token& tok, Language lang);
bool is_infinitival_particle(const Token& tok, Language lang);
bool is_punctuation(const Token& tok);
bool is_preposition(const Token& tok, Language lang);
bool is_adverb(const Token& tok, Language lang);
bool is_determiner_like(const Token& tok, Language lang);

VerbForm verb_form(const Token& tok, Language lang);

/// Lower-cased lemma, falling back to a small form table for the
/// auxiliaries when the lemma column is empty.
std::string lemma_of(const Token& tok, Language lang);

bool is_subject_relation(std::string_view deprel);
bool is_chain_relation(std::string_view deprel);

}  // namespace tmv::tags
