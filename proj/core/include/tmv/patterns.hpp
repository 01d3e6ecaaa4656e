#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tmv/label.hpp"
#include "tmv/lexicon.hpp"
#include "tmv/token.hpp"

namespace tmv {

/// Synthetic verb-chain patterns. Each pattern is realised as a small
/// parsed sentence (either scheme) whose target complex exercises one cell
/// of the rule tables. Used by `rules-dump`, the property tests and the
/// synthetic corpus generator.
struct EnPattern {
  enum class Base {
    kPresent,      // reads / is reading
    kPast,         // read / was reading
    kWill,         // will read
    kGoingTo,      // is going to read
    kWould,        // would read
    kModal,        // may read
    kGerund,       // reading (clause subject)
    kToInfinitive, // wants to read
    kBareInfinitive,
  };
  Base base = Base::kPresent;
  bool perfect = false;
  bool progressive = false;
  bool passive = false;
  int verb = 0;  // index into the verb table (mod size)
};

struct DePattern {
  enum class Kind {
    kSimple,        // liest / las / lese / läse
    kPerfect,       // hat gelesen / ist gegangen
    kFuture,        // wird lesen
    kFuturePerfect, // wird gelesen haben
    kModal,         // kann lesen
    kZuInfinitive,  // versucht, ... zu lesen
  };
  Kind kind = Kind::kSimple;
  MorphTense tense = MorphTense::kPresent;
  MorphMood mood = MorphMood::kIndicative;
  bool passive = false;
  /// Leave the finite verb without Tense/Mood features.
  bool strip_morph = false;
  int verb = 0;
};

struct PatternSentence {
  Sentence sentence;
  std::vector<int> target;  // members of the complex under test, surface order
  std::string description;  // e.g. "will + have + VBN"
  int subject = 0;
  std::vector<int> object;  // determiner + noun
  int main_verb = 0;
  int finite_verb = 0;      // 0 when non-finite
  int punctuation = 0;
};

PatternSentence build_pattern(const EnPattern& p, Scheme scheme, std::string id = "p");
PatternSentence build_pattern(const DePattern& p, Scheme scheme, std::string id = "p");

/// Patterns the German side can realise; passive is skipped for verbs
/// without a direct object.
bool is_realisable(const DePattern& p);
bool is_realisable(const EnPattern& p);

std::vector<EnPattern> all_en_patterns();
std::vector<DePattern> all_de_patterns();

std::size_t en_verb_count();
std::size_t de_verb_count();

/// Human-readable listing: one line per pattern with its label.
void dump_rule_table(std::ostream& out, Scheme scheme = Scheme::kChain);

}  // namespace tmv
