#include "synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tmv/conll.hpp"

namespace tmv::testing {

namespace {

// Root token outside the target complex, or 0.
int host_of(const PatternSentence& p) {
  for (const Token& t : p.sentence.tokens) {
    if (t.head == 0 && std::find(p.target.begin(), p.target.end(), t.index) == p.target.end()) {
      return t.index;
    }
  }
  return 0;
}

void append_text(std::string& out, const Sentence& s) {
  std::ostringstream text;
  write_conll(text, {s});
  out += text.str();
}

std::string pharaoh(std::vector<std::pair<int, int>> links) {
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  std::string line;
  for (const auto& [e, d] : links) {
    if (!line.empty()) line += ' ';
    line += std::to_string(e - 1) + "-" + std::to_string(d - 1);
  }
  return line;
}

Token tok(int index, std::string form, std::string lemma, std::string upos, std::string pos,
          std::string_view feats, int head, std::string deprel) {
  Token t;
  t.index = index;
  t.form = std::move(form);
  t.lemma = std::move(lemma);
  t.upos = std::move(upos);
  t.pos = std::move(pos);
  t.morph = MorphFeatures::parse(feats);
  t.head = head;
  t.deprel = std::move(deprel);
  return t;
}

}  // namespace

void append_pair(ParallelCorpus& corpus, const EnPattern& en, const DePattern& de, Scheme scheme) {
  const std::string id = "s" + std::to_string(corpus.pairs + 1);
  const PatternSentence e = build_pattern(en, scheme, id);
  const PatternSentence d = build_pattern(de, scheme, id);

  std::vector<std::pair<int, int>> links;
  auto link = [&](int a, int b) {
    if (a > 0 && b > 0) links.emplace_back(a, b);
  };
  link(e.subject, d.subject);
  for (std::size_t k = 0; k < std::min(e.object.size(), d.object.size()); ++k) {
    link(e.object[k], d.object[k]);
  }
  link(e.punctuation, d.punctuation);
  link(e.main_verb, d.main_verb);
  link(e.finite_verb, d.finite_verb);
  link(host_of(e), host_of(d));

  append_text(corpus.en, e.sentence);
  append_text(corpus.de, d.sentence);
  corpus.alignment += pharaoh(std::move(links)) + '\n';
  ++corpus.pairs;
}

void append_sein_pair(ParallelCorpus& corpus, Tense de_tense) {
  const std::string id = "s" + std::to_string(corpus.pairs + 1);
  EnPattern ep;
  ep.base = EnPattern::Base::kPast;
  ep.verb = 4;  // intransitive, no object
  const PatternSentence e = build_pattern(ep, Scheme::kChain, id);

  Sentence s;
  s.id = id;
  s.language = Language::kGerman;
  const bool composed = de_tense != Tense::kPraeteritum;
  const bool past = de_tense != Tense::kPerfekt;
  const std::string_view fin_feats = past ? "Mood=Ind|Number=Sing|Person=3|Tense=Past|VerbForm=Fin"
                                          : "Mood=Ind|Number=Sing|Person=3|Tense=Pres|VerbForm=Fin";
  s.tokens.push_back(tok(1, "Er", "er", "PRON", "PPER", "Case=Nom|Number=Sing|Person=3", 2, "SB"));
  s.tokens.push_back(tok(2, past ? "war" : "ist", "sein", "AUX", "VAFIN", fin_feats, 0, "ROOT"));
  s.tokens.push_back(tok(3, "krank", "krank", "ADJ", "ADJD", "", composed ? 4 : 2, "PD"));
  int punct_head = 2;
  if (composed) {
    s.tokens.push_back(tok(4, "gewesen", "sein", "AUX", "VAPP", "VerbForm=Part", 2, "OC"));
  }
  const int punct = s.size() + 1;
  s.tokens.push_back(tok(punct, ".", ".", "PUNCT", "$.", "", punct_head, "--"));
  const int main = composed ? 4 : 2;

  std::vector<std::pair<int, int>> links = {
      {e.subject, 1}, {e.main_verb, main}, {e.punctuation, punct}};
  if (composed) links.emplace_back(e.main_verb, 2);
  append_text(corpus.en, e.sentence);
  append_text(corpus.de, s);
  corpus.alignment += pharaoh(std::move(links)) + '\n';
  ++corpus.pairs;
}

std::optional<EnPattern> en_pattern_for(Tense t, int verb) {
  using B = EnPattern::Base;
  EnPattern p;
  p.verb = verb;
  switch (t) {
    case Tense::kPresentSimple: p.base = B::kPresent; break;
    case Tense::kPresentProgressive: p = {B::kPresent, false, true, false, verb}; break;
    case Tense::kPresentPerfect: p = {B::kPresent, true, false, false, verb}; break;
    case Tense::kPresentPerfectProgressive: p = {B::kPresent, true, true, false, verb}; break;
    case Tense::kPastSimple: p.base = B::kPast; break;
    case Tense::kPastProgressive: p = {B::kPast, false, true, false, verb}; break;
    case Tense::kPastPerfect: p = {B::kPast, true, false, false, verb}; break;
    case Tense::kPastPerfectProgressive: p = {B::kPast, true, true, false, verb}; break;
    case Tense::kFutureI: p.base = B::kWill; break;
    case Tense::kFutureIProgressive: p = {B::kWill, false, true, false, verb}; break;
    case Tense::kFutureII: p = {B::kWill, true, false, false, verb}; break;
    case Tense::kFutureIIProgressive: p = {B::kWill, true, true, false, verb}; break;
    case Tense::kConditionalI: p.base = B::kWould; break;
    case Tense::kConditionalIProgressive: p = {B::kWould, false, true, false, verb}; break;
    case Tense::kConditionalII: p = {B::kWould, true, false, false, verb}; break;
    case Tense::kConditionalIIProgressive: p = {B::kWould, true, true, false, verb}; break;
    case Tense::kGerund: p.base = B::kGerund; break;
    case Tense::kToInfinitive: p.base = B::kToInfinitive; break;
    case Tense::kBareInfinitive: p.base = B::kBareInfinitive; break;
    default: return std::nullopt;
  }
  return p;
}

std::optional<DePattern> de_pattern_for(Tense t, int verb) {
  using K = DePattern::Kind;
  constexpr auto kPres = MorphTense::kPresent;
  constexpr auto kPast = MorphTense::kPast;
  constexpr auto kInd = MorphMood::kIndicative;
  constexpr auto kSubj = MorphMood::kSubjunctive;
  DePattern p;
  switch (t) {
    case Tense::kPraesens: p = {K::kSimple, kPres, kInd}; break;
    case Tense::kPraeteritum: p = {K::kSimple, kPast, kInd}; break;
    case Tense::kPerfekt: p = {K::kPerfect, kPres, kInd}; break;
    case Tense::kPlusquamperfekt: p = {K::kPerfect, kPast, kInd}; break;
    case Tense::kFuturI: p = {K::kFuture, kPres, kInd}; break;
    case Tense::kFuturII: p = {K::kFuturePerfect, kPres, kInd}; break;
    case Tense::kKonjunktivIPresent: p = {K::kSimple, kPres, kSubj}; break;
    case Tense::kKonjunktivIPast: p = {K::kPerfect, kPres, kSubj}; break;
    case Tense::kKonjunktivIIPresent: p = {K::kSimple, kPast, kSubj}; break;
    case Tense::kKonjunktivIIPast: p = {K::kPerfect, kPast, kSubj}; break;
    case Tense::kInfinitive: p = {K::kZuInfinitive, kPres, kInd}; break;
    default: return std::nullopt;
  }
  p.verb = verb;
  return p;
}

std::vector<std::uint64_t> apportion(const std::vector<double>& weights, std::uint64_t total) {
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<std::uint64_t> counts(weights.size(), 0);
  if (sum <= 0 || weights.empty()) return counts;
  std::vector<std::pair<double, std::size_t>> remainders;
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double exact = weights[i] / sum * static_cast<double>(total);
    counts[i] = static_cast<std::uint64_t>(exact);
    assigned += counts[i];
    remainders.emplace_back(exact - static_cast<double>(counts[i]), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++counts[remainders[k].second];
  return counts;
}

ParallelCorpus random_corpus(std::size_t pairs, std::uint64_t seed, Scheme scheme) {
  static const std::vector<EnPattern> en = all_en_patterns();
  static const std::vector<DePattern> de = all_de_patterns();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_en(0, en.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_de(0, de.size() - 1);
  ParallelCorpus corpus;
  for (std::size_t i = 0; i < pairs; ++i) {
    const EnPattern& e = en[pick_en(rng)];
    const DePattern& d = de[pick_de(rng)];
    append_pair(corpus, e, d, scheme);
  }
  return corpus;
}

TMVLabel random_label(Language lang, std::mt19937_64& rng) {
  const auto axis = tense_axis(lang);
  TMVLabel l;
  l.language = lang;
  l.tense = axis[std::uniform_int_distribution<std::size_t>(0, axis.size() - 1)(rng)];
  l.voice = rng() % 4 == 0 ? Voice::kPassive : Voice::kActive;
  if (is_konjunktiv(l.tense)) {
    l.mood = Mood::kSubjunctive;
  } else if ((l.tense == Tense::kPresentSimple || l.tense == Tense::kPraesens) && rng() % 10 == 0) {
    l.mood = Mood::kImperative;
  }
  switch (l.tense) {
    case Tense::kGerund: l.finiteness = Finiteness::kGerund; break;
    case Tense::kToInfinitive: l.finiteness = Finiteness::kToInfinitive; break;
    case Tense::kBareInfinitive: l.finiteness = Finiteness::kBareInfinitive; break;
    case Tense::kInfinitive:
      l.finiteness = rng() % 2 == 0 ? Finiteness::kToInfinitive : Finiteness::kBareInfinitive;
      break;
    default: break;
  }
  const std::string_view name = display_label(l.tense);
  l.progressive = name.find("Prog") != std::string_view::npos;
  return l;
}

PairRecord random_pair_record(std::mt19937_64& rng) {
  PairRecord r;
  r.pair_id = "p" + std::to_string(rng() % 100000);
  r.en = random_label(Language::kEnglish, rng);
  r.de = random_label(Language::kGerman, rng);
  r.link_count = 1 + static_cast<int>(rng() % 3);
  r.main_verb_aligned = rng() % 2 == 0;
  return r;
}

std::vector<TMVLabel> random_labels(Language lang, std::size_t k, std::mt19937_64& rng) {
  std::vector<TMVLabel> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(random_label(lang, rng));
  return out;
}

}  // namespace tmv::testing
