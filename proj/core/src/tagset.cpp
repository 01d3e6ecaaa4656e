#include "tmv/tagset.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "tmv/morph.hpp"

namespace tmv::tags {

namespace {

template <std::size_t N>
bool one_of(std::string_view s, const std::array<std::string_view, N>& set) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

constexpr std::array<std::string_view, 7> kPtbVerbs = {"MD", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ"};
constexpr std::array<std::string_view, 4> kPtbFinite = {"MD", "VBD", "VBP", "VBZ"};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_stts_verb(std::string_view pos) {
  return pos.size() >= 4 && pos[0] == 'V' && (pos[1] == 'V' || pos[1] == 'A' || pos[1] == 'M');
}

const std::unordered_map<std::string, std::string>& en_aux_forms() {
  static const std::unordered_map<std::string, std::string> m = {
      {"am", "be"},     {"is", "be"},      {"are", "be"},    {"was", "be"},     {"were", "be"},
      {"be", "be"},     {"been", "be"},    {"being", "be"},  {"'m", "be"},      {"'re", "be"},
      {"has", "have"},  {"have", "have"},  {"had", "have"},  {"having", "have"}, {"'ve", "have"},
      {"will", "will"}, {"'ll", "will"},   {"wo", "will"},   {"shall", "shall"}, {"sha", "shall"},
      {"would", "would"}, {"'d", "would"}, {"does", "do"},   {"do", "do"},      {"did", "do"},
      {"doing", "do"},  {"done", "do"},    {"going", "go"},  {"gets", "get"},   {"got", "get"},
      {"gotten", "get"}, {"getting", "get"}, {"get", "get"}, {"can", "can"},    {"could", "could"},
      {"may", "may"},   {"might", "might"}, {"must", "must"}, {"should", "should"},
  };
  return m;
}

const std::unordered_map<std::string, std::string>& de_aux_forms() {
  static const std::unordered_map<std::string, std::string> m = [] {
    std::unordered_map<std::string, std::string> out;
    auto add = [&](std::string_view lemma, std::initializer_list<std::string_view> forms) {
      for (auto f : forms) out.emplace(std::string(f), std::string(lemma));
    };
    add("sein", {"bin", "bist", "ist", "sind", "seid", "war", "warst", "waren", "wart", "sei",
                 "seiest", "seist", "seien", "seiet", "wäre", "wärest", "wärst", "wären", "wäret",
                 "wärt", "gewesen", "sein"});
    add("haben", {"habe", "hast", "hat", "haben", "habt", "hatte", "hattest", "hatten", "hattet",
                  "habest", "habet", "hätte", "hättest", "hätten", "hättet", "gehabt"});
    add("werden", {"werde", "wirst", "wird", "werden", "werdet", "wurde", "wurdest", "wurden",
                   "wurdet", "ward", "werdest", "würde", "würdest", "würden", "würdet", "worden",
                   "geworden"});
    add("können", {"kann", "kannst", "können", "könnt", "konnte", "konntest", "konnten",
                   "konntet", "könne", "könnest", "könnet", "könnte", "könntest", "könnten",
                   "könntet", "gekonnt"});
    add("müssen", {"muss", "musst", "müssen", "müsst", "musste", "musstest", "mussten",
                   "müsse", "müsste", "müssten", "müsstest", "gemusst"});
    add("dürfen", {"darf", "darfst", "dürfen", "dürft", "durfte", "durften", "dürfe", "dürfte",
                   "dürften", "gedurft"});
    add("sollen", {"soll", "sollst", "sollen", "sollt", "sollte", "sollten", "solle", "gesollt"});
    add("wollen", {"will", "willst", "wollen", "wollt", "wollte", "wollten", "wolle", "gewollt"});
    add("mögen", {"mag", "magst", "mögen", "mögt", "mochte", "mochten", "möge", "möchte",
                  "möchten", "möchtest", "gemocht"});
    return out;
  }();
  return m;
}

}  // namespace

bool is_verbal(const Token& tok, Language lang) {
  if (lang == Language::kEnglish ? one_of(tok.pos, kPtbVerbs) : is_stts_verb(tok.pos)) return true;
  return tok.upos == "VERB" || tok.upos == "AUX";
}

bool is_finite(const Token& tok, Language lang) {
  if (lang == Language::kEnglish) {
    if (one_of(tok.pos, kPtbFinite)) return true;
  } else if (is_stts_verb(tok.pos) && (ends_with(tok.pos, "FIN") || ends_with(tok.pos, "IMP"))) {
    return true;
  }
  return tok.morph.has("VerbForm", "Fin");
}

bool is_modal_tag(const Token& tok, Language lang) {
  if (lang == Language::kEnglish) {
    if (tok.pos == "MD") return true;
    if (!tok.pos.empty()) return false;
    static constexpr std::array<std::string_view, 11> kModals = {
        "will", "would", "shall", "should", "can", "could", "may", "might", "must", "ought", "'ll"};
    return tok.upos == "AUX" && one_of(std::string_view(lemma_of(tok, lang)), kModals);
  }
  if (tok.pos.size() >= 2 && tok.pos[0] == 'V' && tok.pos[1] == 'M') return true;
  if (!tok.pos.empty()) return false;
  static constexpr std::array<std::string_view, 7> kModals = {
      "können", "müssen", "dürfen", "sollen", "wollen", "mögen", "möchten"};
  return tok.upos == "AUX" && one_of(std::string_view(lemma_of(tok, lang)), kModals);
}

bool is_infinitival_particle(const Token& tok, Language lang) {
  const std::string form = to_lower(tok.form);
  if (lang == Language::kEnglish) {
    return (tok.pos == "TO" && form == "to") || (tok.upos == "PART" && form == "to");
  }
  return tok.pos == "PTKZU" || (tok.upos == "PART" && form == "zu");
}

bool is_punctuation(const Token& tok) {
  static constexpr std::array<std::string_view, 11> kPunct = {
      ".", ",", ":", "``", "''", "-LRB-", "-RRB-", "$.", "$,", "$(", "HYPH"};
  return tok.upos == "PUNCT" || one_of(std::string_view(tok.pos), kPunct);
}

bool is_preposition(const Token& tok, Language lang) {
  if (tok.upos == "ADP") return true;
  if (lang == Language::kEnglish) return tok.pos == "IN";
  return tok.pos == "APPR" || tok.pos == "APPRART" || tok.pos == "APPO" || tok.pos == "APZR";
}

bool is_adverb(const Token& tok, Language lang) {
  if (tok.upos == "ADV") return true;
  if (lang == Language::kEnglish) return tok.pos == "RB" || tok.pos == "RBR" || tok.pos == "RBS";
  return tok.pos == "ADV";
}

bool is_determiner_like(const Token& tok, Language lang) {
  if (tok.upos == "DET" || tok.upos == "NUM") return true;
  if (lang == Language::kEnglish) {
    static constexpr std::array<std::string_view, 6> kDet = {"DT", "PDT", "CD", "PRP$", "WDT", "WP$"};
    return one_of(std::string_view(tok.pos), kDet);
  }
  static constexpr std::array<std::string_view, 8> kDet = {"ART",    "PIAT",  "PIDAT", "PDAT",
                                                           "PPOSAT", "CARD", "PWAT",  "PRELAT"};
  return one_of(std::string_view(tok.pos), kDet);
}

VerbForm verb_form(const Token& tok, Language lang) {
  const std::string_view pos = tok.pos;
  if (lang == Language::kEnglish) {
    if (one_of(pos, kPtbFinite)) return VerbForm::kFinite;
    if (pos == "VB") return VerbForm::kInfinitive;
    if (pos == "VBG") return VerbForm::kGerund;
    if (pos == "VBN") return VerbForm::kParticiple;
  } else if (is_stts_verb(pos)) {
    if (ends_with(pos, "FIN")) return VerbForm::kFinite;
    if (ends_with(pos, "IMP")) return VerbForm::kImperative;
    if (ends_with(pos, "IZU")) return VerbForm::kZuInfinitive;
    if (ends_with(pos, "INF")) return VerbForm::kInfinitive;
    if (ends_with(pos, "PP")) return VerbForm::kParticiple;
  }
  if (auto vf = tok.morph.get("VerbForm")) {
    const std::string v = to_lower(*vf);
    if (v == "fin") {
      return tok.morph.has("Mood", "Imp") ? VerbForm::kImperative : VerbForm::kFinite;
    }
    if (v == "inf") return VerbForm::kInfinitive;
    if (v == "ger") return VerbForm::kGerund;
    if (v == "part") {
      if (lang == Language::kEnglish && tok.morph.has("Tense", "Pres")) return VerbForm::kGerund;
      return VerbForm::kParticiple;
    }
  }
  return VerbForm::kNone;
}

std::string lemma_of(const Token& tok, Language lang) {
  std::string lemma = to_lower(tok.lemma);
  if (!lemma.empty() && lemma != "<unknown>") return lemma;
  const std::string form = to_lower(tok.form);
  const auto& table = lang == Language::kEnglish ? en_aux_forms() : de_aux_forms();
  if (auto it = table.find(form); it != table.end()) return it->second;
  return form;
}

bool is_subject_relation(std::string_view deprel) {
  const std::string r = to_lower(deprel);
  return r == "sbj" || r == "sb" || r == "subj" || r == "nsubj" || r == "nsubj:pass" ||
         r == "csubj" || r == "csubj:pass";
}

bool is_chain_relation(std::string_view deprel) {
  const std::string r = to_lower(deprel);
  return r == "vc" || r == "oc";
}

}  // namespace tmv::tags
