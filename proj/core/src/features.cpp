#include "tmv/features.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "tmv/morph.hpp"
#include "tmv/tagset.hpp"
#include "tmv/types.hpp"

namespace tmv {

namespace detail {
extern const std::string_view kDefaultTemporalLexicon;
}  // namespace detail

namespace {

std::optional<TemporalOrientation> parse_orientation(std::string_view s) {
  if (s == "future") return TemporalOrientation::kFuture;
  if (s == "past") return TemporalOrientation::kPast;
  if (s == "neutral") return TemporalOrientation::kNeutral;
  return std::nullopt;
}

std::string lemma_or_form(const Token& t) { return to_lower(t.lemma.empty() ? t.form : t.lemma); }

std::optional<GrammaticalNumber> number_of(const Token& t, Language lang) {
  if (t.morph.has("Number", "Sing")) return GrammaticalNumber::kSingular;
  if (t.morph.has("Number", "Plur")) return GrammaticalNumber::kPlural;
  if (lang == Language::kEnglish) {
    if (t.pos == "NNS" || t.pos == "NNPS") return GrammaticalNumber::kPlural;
    if (t.pos == "NN" || t.pos == "NNP") return GrammaticalNumber::kSingular;
  }
  const std::string f = to_lower(t.form);
  static const std::vector<std::string> singular = {"i", "he", "she", "it", "ich", "du", "er", "es"};
  static const std::vector<std::string> plural = {"we", "they", "wir", "ihr"};
  if (std::find(singular.begin(), singular.end(), f) != singular.end()) {
    return GrammaticalNumber::kSingular;
  }
  if (std::find(plural.begin(), plural.end(), f) != plural.end()) return GrammaticalNumber::kPlural;
  return std::nullopt;
}

std::string_view to_string(GrammaticalNumber n) {
  return n == GrammaticalNumber::kSingular ? "sg" : "pl";
}

}  // namespace

std::string_view to_string(TemporalOrientation o) {
  switch (o) {
    case TemporalOrientation::kFuture: return "future";
    case TemporalOrientation::kPast: return "past";
    case TemporalOrientation::kNeutral: return "neutral";
  }
  return "neutral";
}

const TemporalLexicon& TemporalLexicon::builtin() {
  static const TemporalLexicon lexicon = load(detail::kDefaultTemporalLexicon);
  return lexicon;
}

TemporalLexicon TemporalLexicon::load(std::istream& in) {
  TemporalLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string term, tag, extra;
    fields >> term >> tag;
    const auto o = parse_orientation(tag);
    if (term.empty() || !o || (fields >> extra)) {
      throw InputError("temporal lexicon line " + std::to_string(line_no) +
                       ": expected 'term<TAB>future|past|neutral'");
    }
    lex.add(term, *o);
  }
  return lex;
}

TemporalLexicon TemporalLexicon::load(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load(in);
}

TemporalLexicon TemporalLexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open temporal lexicon " + path);
  return load(in);
}

void TemporalLexicon::add(std::string_view term, TemporalOrientation orientation) {
  terms_[to_lower(term)] = orientation;
}

std::optional<TemporalOrientation> TemporalLexicon::find(std::string_view term) const {
  const auto it = terms_.find(to_lower(term));
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

FeatureRecord extract_context_features(const Sentence& sentence, const VerbalComplex& vc,
                                       const TMVLabel& label, const TemporalLexicon& lexicon,
                                       const FeatureOptions& options) {
  const Language lang = sentence.language;
  const int n = sentence.size();
  FeatureRecord r;
  r.sentence_id = sentence.id;
  r.vc_members = vc.members;
  r.label = label;
  const Token& main = sentence.at(vc.main_verb);
  r.main_verb_lemma = main.lemma.empty() ? tags::lemma_of(main, lang) : main.lemma;
  for (int m : vc.members) {
    const Token& t = sentence.at(m);
    if (!r.pattern.empty()) r.pattern += '+';
    r.pattern += t.pos.empty() ? t.upos : t.pos;
  }

  auto owns = [&](int i) { return i == vc.anchor || vc.contains(i); };
  // A token belongs to this complex's clause when the first verbal (or
  // anchor) token on its path to the root is part of the complex.
  auto in_clause = [&](int i) {
    int cur = i;
    for (int guard = 0; guard <= n && cur != 0; ++guard) {
      if (owns(cur)) return true;
      if (cur != i && tags::is_verbal(sentence.at(cur), lang)) return false;
      cur = sentence.at(cur).head;
    }
    return false;
  };

  // Subject: finite verb first, then main verb, anchor, other members.
  std::vector<int> governors;
  if (vc.finite_verb) governors.push_back(*vc.finite_verb);
  governors.push_back(vc.main_verb);
  governors.push_back(vc.anchor);
  governors.insert(governors.end(), vc.chain.begin(), vc.chain.end());
  for (int g : governors) {
    if (g < 1 || g > n) continue;
    for (int k : sentence.children(g)) {
      const Token& t = sentence.at(k);
      if (!tags::is_subject_relation(to_lower(t.deprel))) continue;
      r.subject_lemma = lemma_or_form(t);
      r.subject_number = number_of(t, lang);
      for (int d : sentence.children(k)) {
        if (tags::is_determiner_like(sentence.at(d), lang)) {
          r.subject_determiner = to_lower(sentence.at(d).form);
          break;
        }
      }
      break;
    }
    if (r.subject_lemma) break;
  }

  for (int i = 1; i <= n; ++i) {
    const Token& t = sentence.at(i);
    if (owns(i) || tags::is_verbal(t, lang)) continue;
    auto o = lexicon.find(lemma_or_form(t));
    if (!o) o = lexicon.find(t.form);
    if (!o || !in_clause(i)) continue;
    TemporalExpression e;
    e.lemma = lemma_or_form(t);
    e.position = i;
    e.orientation = *o;
    if (tags::is_adverb(t, lang)) {
      e.marker = "adverb";
    } else if (t.head > 0 && tags::is_preposition(sentence.at(t.head), lang)) {
      e.marker = to_lower(sentence.at(t.head).form);
    } else {
      e.marker = "np";
      for (int k : sentence.children(i)) {
        if (tags::is_preposition(sentence.at(k), lang)) {
          e.marker = to_lower(sentence.at(k).form);
          break;
        }
      }
    }
    r.temporal.push_back(std::move(e));
  }

  auto is_marker = [&](const Token& t) {
    const std::string f = to_lower(t.form);
    return std::find(options.conditional_markers.begin(), options.conditional_markers.end(), f) !=
           options.conditional_markers.end();
  };
  // UD and TIGER attach the complementiser to the verb; LTH makes it the
  // clause head.
  const int anchor_head = vc.anchor > 0 ? sentence.at(vc.anchor).head : 0;
  if (anchor_head > 0 && is_marker(sentence.at(anchor_head)) && anchor_head < vc.leftmost()) {
    r.conditional = true;
  }
  for (int g : governors) {
    if (r.conditional || g < 1 || g > n) break;
    for (int k : sentence.children(g)) {
      if (k < vc.leftmost() && is_marker(sentence.at(k))) r.conditional = true;
    }
  }
  if (!r.conditional && options.verb_first_conditionals && lang == Language::kGerman &&
      vc.finite_verb && anchor_head != 0) {
    int first = 1;
    while (first <= n && tags::is_punctuation(sentence.at(first))) ++first;
    const bool question = n > 0 && sentence.at(n).form == "?";
    if (first == *vc.finite_verb && !question) r.conditional = true;
  }
  return r;
}

std::string format_feature_row(const FeatureRecord& r) {
  std::ostringstream row;
  row << r.sentence_id << '\t' << join_indices(r.vc_members) << '\t' << r.main_verb_lemma << '\t'
      << r.pattern << '\t' << tense_name(r.label.tense) << '\t' << to_string(r.label.mood) << '\t'
      << to_string(r.label.voice) << '\t' << r.subject_lemma.value_or("_") << '\t'
      << r.subject_determiner.value_or("_") << '\t'
      << (r.subject_number ? to_string(*r.subject_number) : "_") << '\t';
  if (r.temporal.empty()) row << '_';
  for (std::size_t i = 0; i < r.temporal.size(); ++i) {
    const auto& e = r.temporal[i];
    if (i > 0) row << ';';
    row << e.lemma << ':' << e.marker << ':' << e.position << ':' << to_string(e.orientation);
  }
  row << '\t' << (r.conditional ? 1 : 0);
  return row.str();
}

std::string format_feature_json(const FeatureRecord& r) {
  nlohmann::ordered_json j;
  j["sentence_id"] = r.sentence_id;
  j["vc_token_indices"] = r.vc_members;
  j["main_verb_lemma"] = r.main_verb_lemma;
  j["pattern"] = r.pattern;
  j["tense"] = std::string(tense_name(r.label.tense));
  j["tense_display"] = std::string(display_label(r.label));
  j["mood"] = std::string(to_string(r.label.mood));
  j["voice"] = std::string(to_string(r.label.voice));
  j["finiteness"] = std::string(to_string(r.label.finiteness));
  j["subject_lemma"] = r.subject_lemma ? nlohmann::ordered_json(*r.subject_lemma) : nullptr;
  j["subject_determiner"] =
      r.subject_determiner ? nlohmann::ordered_json(*r.subject_determiner) : nullptr;
  j["subject_number"] =
      r.subject_number ? nlohmann::ordered_json(std::string(to_string(*r.subject_number))) : nullptr;
  auto temporal = nlohmann::ordered_json::array();
  for (const auto& e : r.temporal) {
    temporal.push_back({{"lemma", e.lemma},
                        {"marker", e.marker},
                        {"position", e.position},
                        {"orientation", std::string(to_string(e.orientation))}});
  }
  j["temporal"] = temporal;
  j["conditional"] = r.conditional;
  return j.dump();
}

}  // namespace tmv
