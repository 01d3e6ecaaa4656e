#include "tmv/lexicon.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "tmv/morph.hpp"

namespace tmv {

namespace detail {
extern const std::string_view kDefaultMorphLexicon;
}

namespace {

std::optional<MorphTense> parse_morph_tense(std::string_view t) {
  const std::string v = to_lower(t);
  if (v == "pres") return MorphTense::kPresent;
  if (v == "past") return MorphTense::kPast;
  return std::nullopt;
}

std::optional<MorphMood> parse_morph_mood(std::string_view m) {
  const std::string v = to_lower(m);
  if (v == "ind") return MorphMood::kIndicative;
  if (v == "subj" || v == "sub") return MorphMood::kSubjunctive;
  if (v == "imp") return MorphMood::kImperative;
  return std::nullopt;
}

const std::set<MorphReading>& empty_readings() {
  static const std::set<MorphReading> empty;
  return empty;
}

}  // namespace

bool MorphFallbackLexicon::is_auxiliary_tag(std::string_view pos) {
  return pos == "VAFIN" || pos == "VMFIN" || pos == "VAIMP" || pos == "MD" || pos == "AUX";
}

const MorphFallbackLexicon& MorphFallbackLexicon::builtin() {
  static const MorphFallbackLexicon lexicon = load(detail::kDefaultMorphLexicon);
  return lexicon;
}

void MorphFallbackLexicon::add(Language lang, std::string_view form, std::string_view pos,
                               MorphReading reading) {
  if (!is_auxiliary_tag(pos)) {
    throw InputError("lexicon entry '" + std::string(form) + "' has non-auxiliary tag '" +
                     std::string(pos) + "'");
  }
  entries_[Key{lang, to_lower(form), std::string(pos)}].insert(reading);
}

MorphFallbackLexicon MorphFallbackLexicon::load(std::istream& in) {
  MorphFallbackLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string lang, form, pos, tense, mood;
    if (!(fields >> lang >> form >> pos >> tense >> mood)) {
      throw InputError("lexicon line " + std::to_string(line_no) + ": expected 5 fields");
    }
    const auto language = parse_language(lang);
    const auto t = parse_morph_tense(tense);
    const auto m = parse_morph_mood(mood);
    if (!language || !t || !m) {
      throw InputError("lexicon line " + std::to_string(line_no) + ": bad language, tense or mood");
    }
    lex.add(*language, form, pos, MorphReading{*t, *m});
  }
  return lex;
}

MorphFallbackLexicon MorphFallbackLexicon::load(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load(in);
}

MorphFallbackLexicon MorphFallbackLexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open lexicon file " + path);
  return load(in);
}

const std::set<MorphReading>& MorphFallbackLexicon::lookup(Language lang, std::string_view form,
                                                           std::string_view pos) const {
  auto it = entries_.find(Key{lang, to_lower(form), std::string(pos)});
  return it == entries_.end() ? empty_readings() : it->second;
}

std::size_t MorphFallbackLexicon::size() const {
  std::size_t n = 0;
  for (const auto& [k, v] : entries_) n += v.size();
  return n;
}

}  // namespace tmv
