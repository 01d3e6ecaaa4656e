#include "tmv/patterns.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "tmv/classify.hpp"
#include "tmv/verbal_complex.hpp"

namespace tmv {

namespace {

struct EnVerb {
  std::string_view lemma, third, past, participle, ing;
  bool transitive;
};

constexpr std::array<EnVerb, 6> kEnVerbs = {{
    {"read", "reads", "read", "read", "reading", true},
    {"write", "writes", "wrote", "written", "writing", true},
    {"open", "opens", "opened", "opened", "opening", true},
    {"take", "takes", "took", "taken", "taking", true},
    {"sleep", "sleeps", "slept", "slept", "sleeping", false},
    {"arrive", "arrives", "arrived", "arrived", "arriving", false},
}};

struct DeVerb {
  std::string_view lemma, present, past, konj1, konj2, participle;
  bool sein_perfect;
  bool transitive;
};

constexpr std::array<DeVerb, 7> kDeVerbs = {{
    {"lesen", "liest", "las", "lese", "läse", "gelesen", false, true},
    {"schreiben", "schreibt", "schrieb", "schreibe", "schriebe", "geschrieben", false, true},
    {"öffnen", "öffnet", "öffnete", "öffne", "öffnete", "geöffnet", false, true},
    {"sehen", "sieht", "sah", "sehe", "sähe", "gesehen", false, true},
    {"gehen", "geht", "ging", "gehe", "ginge", "gegangen", true, false},
    {"schlafen", "schläft", "schlief", "schlafe", "schliefe", "geschlafen", false, false},
    {"kommen", "kommt", "kam", "komme", "käme", "gekommen", true, false},
}};

// Small CoNLL sentence under construction; heads are filled in afterwards.
class Builder {
 public:
  Builder(std::string id, Language lang) {
    s_.id = std::move(id);
    s_.language = lang;
  }

  int add(std::string_view form, std::string_view lemma, std::string_view upos,
          std::string_view pos, std::string_view feats = "") {
    Token t;
    t.index = static_cast<int>(s_.tokens.size()) + 1;
    t.form = std::string(form);
    t.lemma = std::string(lemma);
    t.upos = std::string(upos);
    t.pos = std::string(pos);
    t.morph = MorphFeatures::parse(feats);
    s_.tokens.push_back(std::move(t));
    return static_cast<int>(s_.tokens.size());
  }

  void attach(int dep, int head, std::string_view rel) {
    s_.tokens[dep - 1].head = head;
    s_.tokens[dep - 1].deprel = std::string(rel);
  }

  Sentence take() { return std::move(s_); }

 private:
  Sentence s_;
};

std::string surface(const Sentence& s, const std::vector<int>& idx) {
  std::string out;
  for (int i : idx) {
    if (!out.empty()) out += ' ';
    out += s.at(i).form;
  }
  return out;
}

// ---------------------------------------------------------------- English

enum class EnForm { kPresent, kPast, kBase, kParticiple, kGerund, kModal };

struct EnSlot {
  std::string_view lemma;  // "" for the lexical verb
  EnForm form;
  bool passive_aux = false;
};

std::string_view en_pos(EnForm f) {
  switch (f) {
    case EnForm::kPresent: return "VBZ";
    case EnForm::kPast: return "VBD";
    case EnForm::kBase: return "VB";
    case EnForm::kParticiple: return "VBN";
    case EnForm::kGerund: return "VBG";
    case EnForm::kModal: return "MD";
  }
  return "VB";
}

std::string_view en_feats(EnForm f) {
  switch (f) {
    case EnForm::kPresent: return "Mood=Ind|Tense=Pres|VerbForm=Fin";
    case EnForm::kPast: return "Mood=Ind|Tense=Past|VerbForm=Fin";
    case EnForm::kBase: return "VerbForm=Inf";
    case EnForm::kParticiple: return "Tense=Past|VerbForm=Part";
    case EnForm::kGerund: return "VerbForm=Ger";
    case EnForm::kModal: return "VerbForm=Fin";
  }
  return "";
}

std::string_view en_surface(std::string_view lemma, EnForm f, const EnVerb& v) {
  if (lemma == "be") {
    constexpr std::array<std::string_view, 6> be = {"is", "was", "be", "been", "being", "be"};
    return be[static_cast<std::size_t>(f)];
  }
  if (lemma == "have") {
    constexpr std::array<std::string_view, 6> have = {"has", "had", "have", "had", "having", "have"};
    return have[static_cast<std::size_t>(f)];
  }
  if (lemma == "go") return "going";
  if (!lemma.empty()) return lemma;  // will, would, may
  switch (f) {
    case EnForm::kPresent: return v.third;
    case EnForm::kPast: return v.past;
    case EnForm::kParticiple: return v.participle;
    case EnForm::kGerund: return v.ing;
    default: return v.lemma;
  }
}

}  // namespace

bool is_realisable(const EnPattern& p) {
  const EnVerb& v = kEnVerbs[static_cast<std::size_t>(p.verb) % kEnVerbs.size()];
  if (p.passive && !v.transitive) return false;
  using B = EnPattern::Base;
  if (p.base == B::kGerund && p.progressive) return false;
  if (p.base == B::kBareInfinitive && (p.perfect || p.progressive || p.passive)) return false;
  return true;
}

PatternSentence build_pattern(const EnPattern& p, Scheme scheme, std::string id) {
  using B = EnPattern::Base;
  const EnVerb& v = kEnVerbs[static_cast<std::size_t>(p.verb) % kEnVerbs.size()];
  const bool ud = scheme == Scheme::kUd;

  // Chain slots top to bottom.
  std::vector<EnSlot> slots;
  EnForm next = EnForm::kBase;
  bool going = false;
  switch (p.base) {
    case B::kPresent: next = EnForm::kPresent; break;
    case B::kPast: next = EnForm::kPast; break;
    case B::kWill: slots.push_back({"will", EnForm::kModal}); break;
    case B::kWould: slots.push_back({"would", EnForm::kModal}); break;
    case B::kModal: slots.push_back({"may", EnForm::kModal}); break;
    case B::kGoingTo:
      slots.push_back({"be", EnForm::kPresent});
      slots.push_back({"go", EnForm::kGerund});
      going = true;
      break;
    case B::kGerund: next = EnForm::kGerund; break;
    case B::kToInfinitive:
    case B::kBareInfinitive: break;
  }
  if (p.perfect) {
    slots.push_back({"have", next});
    next = EnForm::kParticiple;
  }
  if (p.progressive) {
    slots.push_back({"be", next});
    next = EnForm::kGerund;
  }
  if (p.passive) {
    slots.push_back({"be", next, true});
    next = EnForm::kParticiple;
  }
  slots.push_back({"", next});

  const bool finite_base = p.base != B::kGerund && p.base != B::kToInfinitive &&
                           p.base != B::kBareInfinitive;
  Builder b(std::move(id), Language::kEnglish);
  PatternSentence out;
  int subject = 0, subject_det = 0, host = 0, causee = 0;
  // Subject and (for non-finite targets) the governing clause.
  if (p.base == B::kGerund) {
    // target first, host verb added after the object
  } else if (p.passive && p.base != B::kToInfinitive) {
    subject_det = b.add("The", "the", "DET", "DT", "Definite=Def|PronType=Art");
    subject = b.add("book", "book", "NOUN", "NN", "Number=Sing");
  } else if (p.base == B::kToInfinitive && p.passive) {
    subject_det = b.add("The", "the", "DET", "DT", "Definite=Def|PronType=Art");
    subject = b.add("book", "book", "NOUN", "NN", "Number=Sing");
    host = b.add("seems", "seem", "VERB", "VBZ", "Mood=Ind|Tense=Pres|VerbForm=Fin");
  } else {
    subject = b.add("She", "she", "PRON", "PRP", "Case=Nom|Number=Sing|Person=3|PronType=Prs");
    if (p.base == B::kToInfinitive) {
      host = b.add("seems", "seem", "VERB", "VBZ", "Mood=Ind|Tense=Pres|VerbForm=Fin");
    } else if (p.base == B::kBareInfinitive) {
      host = b.add("made", "make", "VERB", "VBD", "Mood=Ind|Tense=Past|VerbForm=Fin");
      causee = b.add("him", "he", "PRON", "PRP", "Case=Acc|Number=Sing|Person=3|PronType=Prs");
    }
  }
  int to_particle = 0;
  if (p.base == B::kToInfinitive) to_particle = b.add("to", "to", "PART", "TO");
  std::vector<int> chain;
  int going_to = 0;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const EnSlot& slot = slots[k];
    const std::string_view lemma = slot.lemma.empty() ? v.lemma : slot.lemma;
    const bool aux = !slot.lemma.empty() && slot.lemma != "go";
    chain.push_back(b.add(en_surface(slot.lemma, slot.form, v), lemma, aux ? "AUX" : "VERB",
                          en_pos(slot.form), en_feats(slot.form)));
    if (going && slot.lemma == "go") going_to = b.add("to", "to", "PART", "TO");
  }
  std::vector<int> object;
  if (!p.passive && v.transitive) {
    object.push_back(b.add("the", "the", "DET", "DT", "Definite=Def|PronType=Art"));
    object.push_back(b.add("book", "book", "NOUN", "NN", "Number=Sing"));
  }
  if (p.base == B::kGerund) {
    host = b.add("helps", "help", "VERB", "VBZ", "Mood=Ind|Tense=Pres|VerbForm=Fin");
  }
  const int punct = b.add(".", ".", "PUNCT", ".");
  const int main = chain.back();

  // Index of the going verb within `chain`, if any.
  std::size_t going_pos = chain.size();
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (slots[k].lemma == "go") going_pos = k;
  }

  int root = 0;
  if (!ud) {
    root = host != 0 ? host : chain.front();
    for (std::size_t k = 1; k < chain.size(); ++k) {
      if (k == going_pos + 1) {
        b.attach(going_to, chain[going_pos], "OPRD");
        b.attach(chain[k], going_to, "IM");
      } else {
        b.attach(chain[k], chain[k - 1], "VC");
      }
    }
    if (p.base == B::kToInfinitive) {
      b.attach(to_particle, host, "OPRD");
      b.attach(chain.front(), to_particle, "IM");
    } else if (p.base == B::kBareInfinitive) {
      b.attach(causee, host, "OBJ");
      b.attach(chain.front(), host, "OPRD");
    } else if (p.base == B::kGerund) {
      b.attach(chain.front(), host, "SBJ");
    }
    if (subject != 0) b.attach(subject, host != 0 ? host : chain.front(), "SBJ");
    if (subject_det != 0) b.attach(subject_det, subject, "NMOD");
    if (!object.empty()) {
      b.attach(object[0], object[1], "NMOD");
      b.attach(object[1], main, "OBJ");
    }
    b.attach(root, 0, "ROOT");
    b.attach(punct, root, "P");
  } else {
    // Predicate the leading auxiliaries hang off: going, or the main verb.
    const int upper = going_pos < chain.size() ? chain[going_pos] : main;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (k == going_pos) continue;
      const int target = k < going_pos ? upper : main;
      b.attach(chain[k], target, slots[k].passive_aux ? "aux:pass" : "aux");
    }
    if (going_pos < chain.size()) {
      b.attach(main, upper, "xcomp");
      b.attach(going_to, main, "mark");
    }
    root = host != 0 ? host : upper;
    if (p.base == B::kToInfinitive) {
      b.attach(main, host, "xcomp");
      b.attach(to_particle, main, "mark");
    } else if (p.base == B::kBareInfinitive) {
      b.attach(causee, host, "obj");
      b.attach(main, host, "xcomp");
    } else if (p.base == B::kGerund) {
      b.attach(main, host, p.passive ? "csubj:pass" : "csubj");
    }
    if (subject != 0) {
      const bool raised = host != 0;
      b.attach(subject, raised ? host : upper,
               p.passive && !raised ? "nsubj:pass" : "nsubj");
    }
    if (subject_det != 0) b.attach(subject_det, subject, "det");
    if (!object.empty()) {
      b.attach(object[0], object[1], "det");
      b.attach(object[1], main, "obj");
    }
    b.attach(root, 0, "root");
    b.attach(punct, root, "punct");
  }

  out.sentence = b.take();
  out.target = chain;
  if (to_particle != 0) out.target.push_back(to_particle);
  if (going_to != 0) out.target.push_back(going_to);
  std::sort(out.target.begin(), out.target.end());
  out.subject = subject;
  out.object = object;
  out.main_verb = main;
  out.finite_verb = finite_base ? chain.front() : 0;
  out.punctuation = punct;
  out.description = surface(out.sentence, out.target);
  return out;
}

// ----------------------------------------------------------------- German

namespace {

enum class DeForm { kFinite, kInfinitive, kParticiple };

struct DeSlot {
  std::string_view lemma;  // "" for the lexical verb
  DeForm form;
  bool passive_aux = false;
};

std::string_view de_aux_finite(std::string_view lemma, MorphTense t, MorphMood m) {
  const std::size_t i = (t == MorphTense::kPast ? 1 : 0) + (m == MorphMood::kSubjunctive ? 2 : 0);
  if (lemma == "sein") return std::array<std::string_view, 4>{"ist", "war", "sei", "wäre"}[i];
  if (lemma == "haben") return std::array<std::string_view, 4>{"hat", "hatte", "habe", "hätte"}[i];
  if (lemma == "werden") return std::array<std::string_view, 4>{"wird", "wurde", "werde", "würde"}[i];
  return std::array<std::string_view, 4>{"kann", "konnte", "könne", "könnte"}[i];
}

std::string_view de_lexical_finite(const DeVerb& v, MorphTense t, MorphMood m) {
  const bool past = t == MorphTense::kPast;
  if (m == MorphMood::kSubjunctive) return past ? v.konj2 : v.konj1;
  return past ? v.past : v.present;
}

std::string de_feats(MorphTense t, MorphMood m) {
  std::string f = m == MorphMood::kSubjunctive ? "Mood=Sub" : "Mood=Ind";
  f += t == MorphTense::kPast ? "|Tense=Past" : "|Tense=Pres";
  return f + "|VerbForm=Fin";
}

}  // namespace

bool is_realisable(const DePattern& p) {
  using K = DePattern::Kind;
  const DeVerb& v = kDeVerbs[static_cast<std::size_t>(p.verb) % kDeVerbs.size()];
  if (p.passive && !v.transitive) return false;
  if (p.mood == MorphMood::kImperative) return false;
  const bool past_ind = p.tense == MorphTense::kPast && p.mood == MorphMood::kIndicative;
  if ((p.kind == K::kFuture || p.kind == K::kFuturePerfect) && past_ind) return false;
  if (p.kind == K::kZuInfinitive) {
    return p.tense == MorphTense::kPresent && p.mood == MorphMood::kIndicative && !p.strip_morph;
  }
  // Stripped features are recovered from the auxiliary lexicon, which
  // prefers the indicative reading of ambiguous forms.
  if (p.strip_morph) {
    if (p.kind == K::kSimple && !p.passive) return false;
    if (p.mood != MorphMood::kIndicative) return false;
  }
  return true;
}

PatternSentence build_pattern(const DePattern& p, Scheme scheme, std::string id) {
  using K = DePattern::Kind;
  const DeVerb& v = kDeVerbs[static_cast<std::size_t>(p.verb) % kDeVerbs.size()];
  const bool ud = scheme == Scheme::kUd;
  const std::string_view perfect_aux = v.sein_perfect ? "sein" : "haben";

  std::vector<DeSlot> slots;
  switch (p.kind) {
    case K::kSimple:
      if (p.passive) slots = {{"werden", DeForm::kFinite, true}, {"", DeForm::kParticiple}};
      else slots = {{"", DeForm::kFinite}};
      break;
    case K::kPerfect:
      if (p.passive) {
        slots = {{"sein", DeForm::kFinite}, {"worden", DeForm::kParticiple, true},
                 {"", DeForm::kParticiple}};
      } else {
        slots = {{perfect_aux, DeForm::kFinite}, {"", DeForm::kParticiple}};
      }
      break;
    case K::kFuture:
      if (p.passive) {
        slots = {{"werden", DeForm::kFinite}, {"werden", DeForm::kInfinitive, true},
                 {"", DeForm::kParticiple}};
      } else {
        slots = {{"werden", DeForm::kFinite}, {"", DeForm::kInfinitive}};
      }
      break;
    case K::kFuturePerfect:
      if (p.passive) {
        slots = {{"werden", DeForm::kFinite}, {"sein", DeForm::kInfinitive},
                 {"worden", DeForm::kParticiple, true}, {"", DeForm::kParticiple}};
      } else {
        slots = {{"werden", DeForm::kFinite}, {perfect_aux, DeForm::kInfinitive},
                 {"", DeForm::kParticiple}};
      }
      break;
    case K::kModal:
      if (p.passive) {
        slots = {{"können", DeForm::kFinite}, {"werden", DeForm::kInfinitive, true},
                 {"", DeForm::kParticiple}};
      } else {
        slots = {{"können", DeForm::kFinite}, {"", DeForm::kInfinitive}};
      }
      break;
    case K::kZuInfinitive:
      if (p.passive) {
        slots = {{"werden", DeForm::kInfinitive, true}, {"", DeForm::kParticiple}};
      } else {
        slots = {{"", DeForm::kInfinitive}};
      }
      break;
  }

  Builder b(std::move(id), Language::kGerman);
  int subject = 0, subject_det = 0;
  if (p.passive) {
    subject_det = b.add("Das", "der", "DET", "ART", "Case=Nom|Definite=Def|Gender=Neut|Number=Sing");
    subject = b.add("Buch", "Buch", "NOUN", "NN", "Case=Nom|Gender=Neut|Number=Sing");
  } else {
    subject = b.add("Er", "er", "PRON", "PPER", "Case=Nom|Gender=Masc|Number=Sing|Person=3");
  }

  auto add_slot = [&](const DeSlot& slot) {
    const bool lexical = slot.lemma.empty();
    const bool modal = slot.lemma == "können";
    const std::string_view lemma = lexical ? v.lemma : slot.lemma == "worden" ? "werden" : slot.lemma;
    const char cls = lexical ? 'V' : modal ? 'M' : 'A';
    std::string pos = {'V', cls};
    std::string_view form;
    std::string feats;
    switch (slot.form) {
      case DeForm::kFinite:
        pos += "FIN";
        form = lexical ? de_lexical_finite(v, p.tense, p.mood)
                       : de_aux_finite(slot.lemma, p.tense, p.mood);
        if (!p.strip_morph) feats = de_feats(p.tense, p.mood);
        break;
      case DeForm::kInfinitive:
        pos += "INF";
        form = lexical ? v.lemma : slot.lemma;
        feats = "VerbForm=Inf";
        break;
      case DeForm::kParticiple:
        pos += "PP";
        form = lexical ? v.participle : slot.lemma == "worden" ? "worden" : "gewesen";
        feats = "VerbForm=Part";
        break;
    }
    return b.add(form, lemma, lexical ? "VERB" : "AUX", pos, feats);
  };

  int host = 0;
  std::vector<int> chain(slots.size(), 0);
  if (p.kind == K::kZuInfinitive) {
    host = b.add("scheint", "scheinen", "VERB", "VVFIN", "Mood=Ind|Tense=Pres|VerbForm=Fin");
  } else {
    chain[0] = add_slot(slots[0]);
  }
  std::vector<int> object;
  if (!p.passive && v.transitive) {
    object.push_back(b.add("das", "der", "DET", "ART", "Case=Acc|Definite=Def|Gender=Neut|Number=Sing"));
    object.push_back(b.add("Buch", "Buch", "NOUN", "NN", "Case=Acc|Gender=Neut|Number=Sing"));
  }
  // Clause-final cluster: lowest verb first; zu right before the top verb.
  int zu = 0;
  const std::size_t first_final = p.kind == K::kZuInfinitive ? 0 : 1;
  for (std::size_t k = slots.size(); k-- > first_final;) {
    if (k == 0) zu = b.add("zu", "zu", "PART", "PTKZU");
    chain[k] = add_slot(slots[k]);
  }
  const int punct = b.add(".", ".", "PUNCT", "$.");
  const int main = chain.back();

  int root = host != 0 ? host : chain.front();
  if (!ud) {
    for (std::size_t k = 1; k < chain.size(); ++k) b.attach(chain[k], chain[k - 1], "OC");
    if (host != 0) b.attach(chain.front(), host, "OC");
    if (zu != 0) b.attach(zu, chain.front(), "PM");
    b.attach(subject, host != 0 ? host : chain.front(), "SB");
    if (subject_det != 0) b.attach(subject_det, subject, "NK");
    if (!object.empty()) {
      b.attach(object[0], object[1], "NK");
      b.attach(object[1], main, "OA");
    }
    b.attach(root, 0, "--");
    b.attach(punct, root, "--");
  } else {
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      b.attach(chain[k], main, slots[k].passive_aux ? "aux:pass" : "aux");
    }
    if (host == 0) root = main;
    if (host != 0) b.attach(main, host, "xcomp");
    if (zu != 0) b.attach(zu, main, "mark");
    b.attach(subject, host != 0 ? host : main, p.passive && host == 0 ? "nsubj:pass" : "nsubj");
    if (subject_det != 0) b.attach(subject_det, subject, "det");
    if (!object.empty()) {
      b.attach(object[0], object[1], "det");
      b.attach(object[1], main, "obj");
    }
    b.attach(root, 0, "root");
    b.attach(punct, root, "punct");
  }

  PatternSentence out;
  out.sentence = b.take();
  out.target = chain;
  if (zu != 0) out.target.push_back(zu);
  std::sort(out.target.begin(), out.target.end());
  out.subject = subject;
  out.object = object;
  out.main_verb = main;
  out.finite_verb = p.kind == K::kZuInfinitive ? 0 : chain.front();
  out.punctuation = punct;
  out.description = surface(out.sentence, out.target);
  if (p.strip_morph) out.description += " (no features)";
  return out;
}

std::vector<EnPattern> all_en_patterns() {
  using B = EnPattern::Base;
  std::vector<EnPattern> out;
  for (B base : {B::kPresent, B::kPast, B::kWill, B::kGoingTo, B::kWould, B::kModal, B::kGerund,
                 B::kToInfinitive, B::kBareInfinitive}) {
    for (int verb = 0; verb < static_cast<int>(kEnVerbs.size()); ++verb) {
      for (bool perfect : {false, true}) {
        for (bool progressive : {false, true}) {
          for (bool passive : {false, true}) {
            EnPattern p{base, perfect, progressive, passive, verb};
            if (is_realisable(p)) out.push_back(p);
          }
        }
      }
    }
  }
  return out;
}

std::vector<DePattern> all_de_patterns() {
  using K = DePattern::Kind;
  std::vector<DePattern> out;
  for (K kind : {K::kSimple, K::kPerfect, K::kFuture, K::kFuturePerfect, K::kModal,
                 K::kZuInfinitive}) {
    for (int verb = 0; verb < static_cast<int>(kDeVerbs.size()); ++verb) {
      for (MorphTense t : {MorphTense::kPresent, MorphTense::kPast}) {
        for (MorphMood m : {MorphMood::kIndicative, MorphMood::kSubjunctive}) {
          for (bool passive : {false, true}) {
            for (bool strip : {false, true}) {
              DePattern p{kind, t, m, passive, strip, verb};
              if (is_realisable(p)) out.push_back(p);
            }
          }
        }
      }
    }
  }
  return out;
}

std::size_t en_verb_count() { return kEnVerbs.size(); }
std::size_t de_verb_count() { return kDeVerbs.size(); }

namespace {

template <typename Pattern>
void dump_one(std::ostream& out, const Pattern& p, Scheme scheme) {
  const PatternSentence ps = build_pattern(p, scheme);
  for (const auto& vc : extract_vcs(ps.sentence, scheme)) {
    if (vc.members != ps.target) continue;
    const TMVLabel label = classify(vc, ps.sentence);
    out << to_string(label.language) << '\t' << ps.description << '\t'
        << tense_name(label.tense) << '\t' << to_string(label.mood) << '\t'
        << to_string(label.voice) << '\t' << to_string(label.finiteness) << '\t'
        << (label.progressive ? "true" : "false") << '\n';
    return;
  }
  out << "# no complex matched: " << ps.description << '\n';
}

}  // namespace

void dump_rule_table(std::ostream& out, Scheme scheme) {
  out << "language\tchain\ttense\tmood\tvoice\tfiniteness\tprogressive\n";
  for (const auto& p : all_en_patterns()) {
    if (p.verb == 0) dump_one(out, p, scheme);
  }
  for (const auto& p : all_de_patterns()) {
    if (p.verb == 0 || (p.verb == 4 && !p.passive)) dump_one(out, p, scheme);
  }
}

}  // namespace tmv
