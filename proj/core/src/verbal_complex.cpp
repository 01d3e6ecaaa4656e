#include "tmv/verbal_complex.hpp"

#include <algorithm>
#include <map>

#include "tmv/morph.hpp"
#include "tmv/tagset.hpp"

namespace tmv {

namespace {

using tags::VerbForm;

struct SentenceView {
  const Sentence& s;
  Language lang;
  int n;
  std::vector<std::vector<int>> kids;
  std::vector<bool> verbal;
  std::vector<bool> particle;

  explicit SentenceView(const Sentence& sentence)
      : s(sentence), lang(sentence.language), n(sentence.size()), kids(n + 1),
        verbal(n + 1, false), particle(n + 1, false) {
    for (const Token& t : s.tokens) {
      kids[t.head].push_back(t.index);
      verbal[t.index] = tags::is_verbal(t, lang);
      particle[t.index] = !verbal[t.index] && tags::is_infinitival_particle(t, lang);
    }
  }

  const Token& tok(int i) const { return s.tokens[i - 1]; }
  std::string rel(int i) const { return to_lower(tok(i).deprel); }
  int head(int i) const { return tok(i).head; }
  std::string lemma(int i) const { return tags::lemma_of(tok(i), lang); }
};

bool is_present_finite_be(const SentenceView& v, int i) {
  if (v.lang != Language::kEnglish || v.lemma(i) != "be") return false;
  const Token& t = v.tok(i);
  return t.pos == "VBZ" || t.pos == "VBP" ||
         (t.morph.has("VerbForm", "Fin") && t.morph.has("Tense", "Pres"));
}

bool is_going(const SentenceView& v, int i) {
  return v.lang == Language::kEnglish && v.lemma(i) == "go" &&
         tags::verb_form(v.tok(i), v.lang) == VerbForm::kGerund;
}

bool has_particle_child(const SentenceView& v, int i) {
  return std::any_of(v.kids[i].begin(), v.kids[i].end(), [&](int k) { return v.particle[k]; });
}

int find_particle_child(const SentenceView& v, int i) {
  for (int k : v.kids[i]) {
    if (v.particle[k]) return k;
  }
  return 0;
}

bool is_aux_lemma(const SentenceView& v, int i) {
  const std::string l = v.lemma(i);
  return l == "be" || l == "have" || l == "get" || l == "sein" || l == "haben" || l == "werden";
}

// Coordinated conjunct above `anchor`, or 0. Handles LTH/TIGER (conjunct
// hangs off the conjunction) and UD (conjunct hangs off the first one).
int coordinated_sibling(const SentenceView& v, int anchor) {
  const std::string rel = v.rel(anchor);
  const int h = v.head(anchor);
  if (h == 0) return 0;
  if (rel == "conj" || rel == "cj") {
    if (v.verbal[h]) return h;
    const std::string hrel = v.rel(h);
    if ((hrel == "coord" || hrel == "cd") && v.head(h) > 0) return v.head(h);
  }
  return 0;
}

bool looks_imperative(const SentenceView& v, const VerbalComplex& vc) {
  if (vc.chain.empty()) return false;
  const int top = vc.chain.front();
  const Token& t = v.tok(top);
  if (t.morph.has("Mood", "Imp")) return true;
  if (v.lang != Language::kEnglish || t.pos != "VB") return false;
  if (v.head(vc.anchor) != 0) return false;
  for (int m : vc.chain) {
    for (int k : v.kids[m]) {
      if (tags::is_subject_relation(v.tok(k).deprel)) return false;
    }
  }
  for (int i = 1; i < top; ++i) {
    const Token& before = v.tok(i);
    if (!tags::is_punctuation(before) && !tags::is_adverb(before, v.lang) && before.pos != "UH" &&
        before.upos != "INTJ") {
      return false;
    }
  }
  return true;
}

void finalise(const SentenceView& v, VerbalComplex& vc) {
  std::sort(vc.members.begin(), vc.members.end());
  vc.members.erase(std::unique(vc.members.begin(), vc.members.end()), vc.members.end());
  for (int m : vc.chain) {
    if (tags::is_finite(v.tok(m), v.lang)) {
      vc.finite_verb = m;
      break;
    }
  }
  if (!vc.finite_verb && looks_imperative(v, vc)) vc.finite_verb = vc.chain.front();
}

std::vector<VerbalComplex> extract_chain(const SentenceView& v) {
  const int n = v.n;
  std::vector<int> chain_parent(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (!v.verbal[i]) continue;
    const int h = v.head(i);
    if (h == 0 || !v.verbal[h]) continue;
    const std::string rel = v.rel(i);
    // A zu-infinitive under OC opens its own complex ("scheint ... zu lesen").
    if (v.lang == Language::kGerman &&
        (has_particle_child(v, i) || tags::verb_form(v.tok(i), v.lang) == VerbForm::kZuInfinitive)) {
      continue;
    }
    if (tags::is_chain_relation(rel) || (rel == "prd" && is_aux_lemma(v, h))) chain_parent[i] = h;
  }
  // "be going to V": the infinitive continues the chain of the finite be.
  auto going_under_present_be = [&](int g) {
    return g > 0 && v.verbal[g] && is_going(v, g) && chain_parent[g] != 0 &&
           is_present_finite_be(v, chain_parent[g]);
  };
  std::vector<int> to_particle(n + 1, 0);  // verb -> its infinitival particle
  for (int i = 1; i <= n; ++i) {
    if (!v.verbal[i] || chain_parent[i] != 0) continue;
    const int h = v.head(i);
    if (h == 0) continue;
    if (v.particle[h] && v.rel(i) == "im") {
      to_particle[i] = h;
      if (going_under_present_be(v.head(h))) chain_parent[i] = v.head(h);
    } else if (going_under_present_be(h) && has_particle_child(v, i)) {
      chain_parent[i] = h;
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (!v.verbal[i] || to_particle[i] != 0) continue;
    if (int p = find_particle_child(v, i); p != 0 && p < i) to_particle[i] = p;
  }

  std::vector<std::vector<int>> chain_kids(n + 1);
  for (int i = 1; i <= n; ++i) {
    if (chain_parent[i] != 0) chain_kids[chain_parent[i]].push_back(i);
  }

  std::vector<VerbalComplex> out;
  for (int root = 1; root <= n; ++root) {
    if (!v.verbal[root] || chain_parent[root] != 0) continue;
    VerbalComplex vc;
    vc.sentence_id = v.s.id;
    vc.language = v.lang;
    vc.anchor = root;
    std::vector<std::pair<int, int>> by_depth;  // (depth, index)
    std::vector<std::pair<int, int>> stack = {{root, 0}};
    while (!stack.empty()) {
      auto [cur, depth] = stack.back();
      stack.pop_back();
      by_depth.emplace_back(depth, cur);
      vc.members.push_back(cur);
      if (to_particle[cur] != 0) vc.members.push_back(to_particle[cur]);
      for (int k : chain_kids[cur]) stack.emplace_back(k, depth + 1);
    }
    std::sort(by_depth.begin(), by_depth.end());
    for (const auto& [d, i] : by_depth) vc.chain.push_back(i);
    vc.main_verb = vc.chain.back();
    finalise(v, vc);
    out.push_back(std::move(vc));
  }
  return out;
}

bool is_aux_relation(const std::string& rel) {
  return rel == "aux" || rel == "aux:pass" || rel == "cop";
}

std::vector<VerbalComplex> extract_ud(const SentenceView& v) {
  const int n = v.n;
  // Follow aux/cop links up to the predicate they belong to.
  auto predicate_of = [&](int i) {
    int cur = i;
    for (int guard = 0; guard < n; ++guard) {
      if (!v.verbal[cur] || !is_aux_relation(v.rel(cur)) || v.head(cur) == 0) return cur;
      cur = v.head(cur);
    }
    return cur;
  };

  std::map<int, std::vector<int>> auxes;  // predicate -> aux/cop members
  std::vector<bool> is_predicate(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (!v.verbal[i]) continue;
    const int p = predicate_of(i);
    if (p == i) {
      is_predicate[i] = true;
    } else {
      auxes[p].push_back(i);
      is_predicate[p] = true;
    }
  }

  auto order_auxes = [&](int p) {
    std::vector<int> a = auxes.count(p) ? auxes.at(p) : std::vector<int>{};
    std::sort(a.begin(), a.end());
    if (v.lang == Language::kGerman) std::reverse(a.begin(), a.end());
    auto fin = std::find_if(a.begin(), a.end(),
                            [&](int i) { return tags::is_finite(v.tok(i), v.lang); });
    if (fin != a.end()) std::rotate(a.begin(), fin, fin + 1);
    if (v.verbal[p]) a.push_back(p);
    return a;
  };

  // "is going to read": fold the xcomp infinitive into the going complex.
  std::map<int, int> merged_into;  // xcomp predicate -> going predicate
  for (int p = 1; p <= n; ++p) {
    if (!is_predicate[p] || !v.verbal[p] || !is_going(v, p) || !auxes.count(p)) continue;
    const auto& a = auxes.at(p);
    if (!std::any_of(a.begin(), a.end(), [&](int x) { return is_present_finite_be(v, x); })) {
      continue;
    }
    for (int k : v.kids[p]) {
      if (v.verbal[k] && is_predicate[k] && v.rel(k) == "xcomp" && has_particle_child(v, k)) {
        merged_into[k] = p;
        break;
      }
    }
  }

  std::vector<VerbalComplex> out;
  for (int p = 1; p <= n; ++p) {
    if (!is_predicate[p] || merged_into.count(p)) continue;
    VerbalComplex vc;
    vc.sentence_id = v.s.id;
    vc.language = v.lang;
    vc.anchor = p;
    auto add_predicate = [&](int pred) {
      auto chain = order_auxes(pred);
      vc.chain.insert(vc.chain.end(), chain.begin(), chain.end());
      vc.members.insert(vc.members.end(), chain.begin(), chain.end());
      // English "to" precedes its verb; German "zu" may follow a participle
      // ("gelesen zu werden") and hang off any member.
      for (int m : chain) {
        if (v.lang == Language::kEnglish && m != pred) continue;
        for (int k : v.kids[m]) {
          if (v.particle[k] && (v.lang == Language::kGerman || k < m)) vc.members.push_back(k);
        }
      }
    };
    add_predicate(p);
    for (const auto& [xcomp, going] : merged_into) {
      if (going == p) add_predicate(xcomp);
    }
    if (vc.chain.empty()) continue;
    vc.main_verb = vc.chain.back();
    finalise(v, vc);
    out.push_back(std::move(vc));
  }
  return out;
}

void carry_coordinated_context(const SentenceView& v, std::vector<VerbalComplex>& vcs) {
  std::vector<int> owner(v.n + 1, -1);
  for (std::size_t k = 0; k < vcs.size(); ++k) {
    for (int m : vcs[k].members) owner[m] = static_cast<int>(k);
  }
  for (auto& vc : vcs) {
    if (vc.finite_verb || vc.chain.size() != 1) continue;
    const int x = coordinated_sibling(v, vc.anchor);
    if (x == 0 || owner[x] < 0) continue;
    const VerbalComplex& sibling = vcs[owner[x]];
    if (&sibling == &vc) continue;
    if (v.tok(x).pos != v.tok(vc.chain.front()).pos) continue;
    auto pos = std::find(sibling.chain.begin(), sibling.chain.end(), x);
    if (pos == sibling.chain.end() || pos == sibling.chain.begin()) continue;
    vc.carried.assign(sibling.chain.begin(), pos);
  }
}

}  // namespace

std::string_view to_string(Finiteness f) {
  switch (f) {
    case Finiteness::kFinite: return "finite";
    case Finiteness::kGerund: return "gerund";
    case Finiteness::kToInfinitive: return "to_infinitive";
    case Finiteness::kBareInfinitive: return "bare_infinitive";
    case Finiteness::kParticiple: return "participle";
  }
  return "finite";
}

std::optional<Finiteness> parse_finiteness(std::string_view text) {
  for (auto f : {Finiteness::kFinite, Finiteness::kGerund, Finiteness::kToInfinitive,
                 Finiteness::kBareInfinitive, Finiteness::kParticiple}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

bool VerbalComplex::contains(int index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

std::vector<int> VerbalComplex::effective_chain() const {
  std::vector<int> out = carried;
  out.insert(out.end(), chain.begin(), chain.end());
  return out;
}

std::vector<VerbalComplex> extract_vcs(const Sentence& sentence, Scheme scheme) {
  if (sentence.tokens.empty()) return {};
  const SentenceView view(sentence);
  auto vcs = scheme == Scheme::kChain ? extract_chain(view) : extract_ud(view);
  carry_coordinated_context(view, vcs);
  std::sort(vcs.begin(), vcs.end(),
            [](const VerbalComplex& a, const VerbalComplex& b) { return a.leftmost() < b.leftmost(); });
  return vcs;
}

Finiteness finiteness_of(const VerbalComplex& vc, const Sentence& sentence) {
  const Language lang = sentence.language;
  if (vc.finite_verb) return Finiteness::kFinite;
  for (int c : vc.carried) {
    if (tags::is_finite(sentence.at(c), lang)) return Finiteness::kFinite;
  }
  const auto chain = vc.effective_chain();
  if (chain.empty()) return Finiteness::kParticiple;
  for (int m : vc.members) {
    const Token& t = sentence.at(m);
    if (tags::is_infinitival_particle(t, lang) && !tags::is_verbal(t, lang)) {
      return Finiteness::kToInfinitive;
    }
    if (tags::verb_form(t, lang) == VerbForm::kZuInfinitive) return Finiteness::kToInfinitive;
  }
  switch (tags::verb_form(sentence.at(chain.front()), lang)) {
    case VerbForm::kGerund: return Finiteness::kGerund;
    case VerbForm::kInfinitive: return Finiteness::kBareInfinitive;
    case VerbForm::kZuInfinitive: return Finiteness::kToInfinitive;
    case VerbForm::kFinite:
    case VerbForm::kImperative: return Finiteness::kFinite;
    default: return Finiteness::kParticiple;
  }
}

std::string join_indices(const std::vector<int>& indices) {
  std::string out;
  for (int i : indices) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace tmv
