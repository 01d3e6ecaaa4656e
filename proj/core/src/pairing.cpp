#include "tmv/pairing.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <istream>
#include <sstream>
#include <tuple>

#include "tmv/morph.hpp"
#include "tmv/tagset.hpp"

namespace tmv {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::optional<std::vector<int>> parse_indices(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || value < 1) return std::nullopt;
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

Finiteness default_finiteness(Tense t) {
  switch (t) {
    case Tense::kGerund: return Finiteness::kGerund;
    case Tense::kToInfinitive: return Finiteness::kToInfinitive;
    case Tense::kBareInfinitive:
    case Tense::kInfinitive: return Finiteness::kBareInfinitive;
    default: return Finiteness::kFinite;
  }
}

std::string main_lemma(const LabeledVC& v, const Sentence& s) {
  const Token& t = s.at(v.vc.main_verb);
  return t.lemma.empty() ? tags::lemma_of(t, s.language) : t.lemma;
}

struct Search {
  const std::vector<std::vector<int>>& w;
  const std::vector<std::vector<bool>>& main;
  std::size_t n_de;
  std::vector<int> current;  // english -> german or -1
  std::vector<bool> used;
  std::vector<int> best;
  int best_weight = -1;
  int best_main = -1;

  // Unmatched sorts after every real column.
  static std::vector<int> key(const std::vector<int>& a) {
    std::vector<int> k = a;
    for (int& x : k) {
      if (x < 0) x = INT_MAX;
    }
    return k;
  }

  void run(std::size_t e, int weight, int mains) {
    if (e == current.size()) {
      if (weight > best_weight || (weight == best_weight && mains > best_main) ||
          (weight == best_weight && mains == best_main && key(current) < key(best))) {
        best = current;
        best_weight = weight;
        best_main = mains;
      }
      return;
    }
    for (std::size_t d = 0; d < n_de; ++d) {
      if (used[d] || w[e][d] < 1) continue;
      used[d] = true;
      current[e] = static_cast<int>(d);
      run(e + 1, weight + w[e][d], mains + (main[e][d] ? 1 : 0));
      used[d] = false;
    }
    current[e] = -1;
    run(e + 1, weight, mains);
  }
};

}  // namespace

std::optional<MatchingMode> parse_matching(std::string_view text) {
  if (text == "greedy") return MatchingMode::kGreedy;
  if (text == "exhaustive") return MatchingMode::kExhaustive;
  return std::nullopt;
}

std::optional<PairCriterion> parse_criterion(std::string_view text) {
  if (text == "any-link" || text == "any_link") return PairCriterion::kAnyLink;
  if (text == "main-verb" || text == "main_verb") return PairCriterion::kMainVerb;
  return std::nullopt;
}

std::vector<std::vector<int>> link_weights(const std::vector<LabeledVC>& en,
                                           const std::vector<LabeledVC>& de,
                                           const AlignmentSet& links) {
  std::vector<std::vector<int>> w(en.size(), std::vector<int>(de.size(), 0));
  for (const auto& [i, j] : links.links) {
    for (std::size_t e = 0; e < en.size(); ++e) {
      if (!en[e].vc.contains(i)) continue;
      for (std::size_t d = 0; d < de.size(); ++d) {
        if (de[d].vc.contains(j)) ++w[e][d];
      }
    }
  }
  return w;
}

Matching greedy_matching(const std::vector<std::vector<int>>& weights,
                         const std::vector<std::vector<bool>>& main_aligned,
                         const std::vector<int>& en_order, const std::vector<int>& de_order) {
  const std::size_t ne = weights.size();
  const std::size_t nd = ne == 0 ? 0 : weights.front().size();
  std::vector<bool> en_used(ne, false), de_used(nd, false);
  Matching out;
  while (true) {
    int be = -1, bd = -1;
    for (std::size_t e = 0; e < ne; ++e) {
      if (en_used[e]) continue;
      for (std::size_t d = 0; d < nd; ++d) {
        if (de_used[d] || weights[e][d] < 1) continue;
        if (be < 0) {
          be = static_cast<int>(e);
          bd = static_cast<int>(d);
          continue;
        }
        const auto cand = std::make_tuple(-weights[e][d], main_aligned[e][d] ? 0 : 1,
                                          en_order[e], de_order[d]);
        const auto cur = std::make_tuple(-weights[be][bd], main_aligned[be][bd] ? 0 : 1,
                                         en_order[be], de_order[bd]);
        if (cand < cur) {
          be = static_cast<int>(e);
          bd = static_cast<int>(d);
        }
      }
    }
    if (be < 0) break;
    en_used[be] = true;
    de_used[bd] = true;
    out.emplace_back(be, bd);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matching exhaustive_matching(const std::vector<std::vector<int>>& weights,
                             const std::vector<std::vector<bool>>& main_aligned) {
  const std::size_t ne = weights.size();
  const std::size_t nd = ne == 0 ? 0 : weights.front().size();
  Search s{weights, main_aligned, nd, std::vector<int>(ne, -1), std::vector<bool>(nd, false),
           std::vector<int>(ne, -1)};
  s.run(0, 0, 0);
  Matching out;
  for (std::size_t e = 0; e < ne; ++e) {
    if (s.best[e] >= 0) out.emplace_back(static_cast<int>(e), s.best[e]);
  }
  return out;
}

PairingResult pair_vcs(const std::vector<LabeledVC>& en, const std::vector<LabeledVC>& de,
                       const AlignmentSet& links, int en_length, int de_length,
                       const PairingOptions& options) {
  PairingResult result;
  AlignmentSet valid;
  valid.id = links.id;
  for (const auto& [i, j] : links.links) {
    if (i < 1 || j < 1 || i > en_length || j > de_length) {
      ++result.dropped_links;
    } else {
      valid.links.emplace_back(i, j);
    }
  }

  auto w = link_weights(en, de, valid);
  std::vector<std::vector<bool>> main(en.size(), std::vector<bool>(de.size(), false));
  for (std::size_t e = 0; e < en.size(); ++e) {
    for (std::size_t d = 0; d < de.size(); ++d) {
      main[e][d] = valid.contains(en[e].vc.main_verb, de[d].vc.main_verb);
      if (options.criterion == PairCriterion::kMainVerb && !main[e][d]) w[e][d] = 0;
    }
  }
  std::vector<int> en_order, de_order;
  for (const auto& v : en) en_order.push_back(v.vc.leftmost());
  for (const auto& v : de) de_order.push_back(v.vc.leftmost());

  Matching m;
  if (options.matching == MatchingMode::kExhaustive) {
    if (en.size() <= kExhaustiveLimit && de.size() <= kExhaustiveLimit) {
      m = exhaustive_matching(w, main);
    } else {
      result.fell_back = true;
      m = greedy_matching(w, main, en_order, de_order);
    }
  } else {
    m = greedy_matching(w, main, en_order, de_order);
  }

  std::vector<bool> en_paired(en.size(), false), de_paired(de.size(), false);
  for (const auto& [e, d] : m) {
    en_paired[e] = true;
    de_paired[d] = true;
    VCPair p;
    p.pair_id = links.id.empty() ? en[e].vc.sentence_id : links.id;
    p.en = en[e];
    p.de = de[d];
    p.link_count = w[e][d];
    p.main_verb_aligned = main[e][d];
    result.pairs.push_back(std::move(p));
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const VCPair& a, const VCPair& b) {
    return a.en.vc.leftmost() < b.en.vc.leftmost();
  });
  for (std::size_t e = 0; e < en.size(); ++e) {
    if (!en_paired[e]) result.unpaired_en.push_back(en[e]);
  }
  for (std::size_t d = 0; d < de.size(); ++d) {
    if (!de_paired[d]) result.unpaired_de.push_back(de[d]);
  }
  return result;
}

PairRecord to_record(const VCPair& pair, const Sentence& en, const Sentence& de) {
  PairRecord r;
  r.pair_id = pair.pair_id;
  r.en = pair.en.label;
  r.de = pair.de.label;
  r.en_tokens = pair.en.vc.members;
  r.de_tokens = pair.de.vc.members;
  r.link_count = pair.link_count;
  r.main_verb_aligned = pair.main_verb_aligned;
  r.en_lemma = main_lemma(pair.en, en);
  r.de_lemma = main_lemma(pair.de, de);
  return r;
}

std::string format_pair_row(const VCPair& pair, const Sentence& en, const Sentence& de) {
  const PairRecord r = to_record(pair, en, de);
  std::ostringstream row;
  row << r.pair_id << '\t' << tense_name(r.en.tense) << '\t' << tense_name(r.de.tense) << '\t'
      << join_indices(r.en_tokens) << '\t' << join_indices(r.de_tokens) << '\t' << r.link_count
      << '\t' << (r.main_verb_aligned ? 1 : 0) << '\t' << to_string(r.en.mood) << '\t'
      << to_string(r.en.voice) << '\t' << to_string(r.de.mood) << '\t' << to_string(r.de.voice)
      << '\t' << to_string(r.en.finiteness) << '\t' << to_string(r.de.finiteness) << '\t'
      << r.en_lemma << '\t' << r.de_lemma;
  return row.str();
}

PairReadResult read_pairs(std::istream& in) {
  PairReadResult result;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto f = split_tabs(line);
    if (f[0] == "pair_id") continue;
    if (f.size() < 6) {
      result.log.error(lineno, "expected at least 6 columns, found " + std::to_string(f.size()));
      continue;
    }
    PairRecord r;
    r.pair_id = std::string(f[0]);
    const auto en = lookup_tense(f[1]);
    const auto de = lookup_tense(f[2]);
    if (!en || language_of(*en) != Language::kEnglish) {
      result.log.error(lineno, "unknown English label '" + std::string(f[1]) + "'");
      continue;
    }
    if (!de || language_of(*de) != Language::kGerman) {
      result.log.error(lineno, "unknown German label '" + std::string(f[2]) + "'");
      continue;
    }
    auto en_tokens = parse_indices(f[3]);
    auto de_tokens = parse_indices(f[4]);
    auto links = parse_int(f[5]);
    if (!en_tokens || !de_tokens || !links || *links < 0) {
      result.log.error(lineno, "bad token list or link count");
      continue;
    }
    r.en_tokens = std::move(*en_tokens);
    r.de_tokens = std::move(*de_tokens);
    r.link_count = *links;
    r.en.language = Language::kEnglish;
    r.en.tense = *en;
    r.en.finiteness = default_finiteness(*en);
    r.en.progressive = display_label(*en).find("Prog") != std::string_view::npos;
    r.de.language = Language::kGerman;
    r.de.tense = *de;
    r.de.finiteness = default_finiteness(*de);
    r.de.mood = is_konjunktiv(*de) ? Mood::kSubjunctive : Mood::kIndicative;

    bool ok = true;
    auto optional_field = [&](std::size_t k, auto parse, auto& target) {
      if (f.size() <= k || f[k].empty()) return;
      if (auto v = parse(f[k])) {
        target = *v;
      } else {
        result.log.error(lineno, "bad value '" + std::string(f[k]) + "' in column " +
                                     std::to_string(k + 1));
        ok = false;
      }
    };
    if (f.size() > 6) r.main_verb_aligned = f[6] == "1";
    optional_field(7, parse_mood, r.en.mood);
    optional_field(8, parse_voice, r.en.voice);
    optional_field(9, parse_mood, r.de.mood);
    optional_field(10, parse_voice, r.de.voice);
    optional_field(11, parse_finiteness, r.en.finiteness);
    optional_field(12, parse_finiteness, r.de.finiteness);
    if (f.size() > 13) r.en_lemma = std::string(f[13]);
    if (f.size() > 14) r.de_lemma = std::string(f[14]);
    if (ok) result.records.push_back(std::move(r));
  }
  return result;
}

}  // namespace tmv
