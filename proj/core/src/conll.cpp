#include "tmv/conll.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "tmv/morph.hpp"

namespace tmv {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::string field(std::string_view f) {
  return f == "_" ? std::string() : std::string(f);
}

std::string_view or_underscore(const std::string& s) {
  return s.empty() ? std::string_view("_") : std::string_view(s);
}

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Multiword ranges ("3-4") and empty nodes ("5.1") are not tokens.
bool is_non_token_id(std::string_view id) {
  return id.find('-') != std::string_view::npos || id.find('.') != std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<int> Sentence::children(int index) const {
  std::vector<int> out;
  for (const Token& t : tokens) {
    if (t.head == index) out.push_back(t.index);
  }
  return out;
}

std::string_view to_string(ConllLayout layout) {
  return layout == ConllLayout::kConllU ? "conllu" : "conll09";
}

std::optional<ConllLayout> parse_layout(std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "conllu" || t == "conll-u" || t == "ud10") return ConllLayout::kConllU;
  if (t == "conll09" || t == "conll2009" || t == "conll-2009") return ConllLayout::kConll09;
  return std::nullopt;
}

int find_cycle(const std::vector<Token>& tokens) {
  const int n = static_cast<int>(tokens.size());
  // 0 = unvisited, 1 = on current path, 2 = known to reach the root
  std::vector<int> state(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (cur != 0 && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      const int head = tokens[cur - 1].head;
      if (head < 0 || head > n) break;
      cur = head;
    }
    if (cur != 0 && state[cur] == 1) return cur;
    for (int p : path) state[p] = 2;
  }
  return 0;
}

ConllReader::ConllReader(std::istream& in, Language language, ConllOptions options)
    : in_(in), language_(language), options_(std::move(options)) {}

std::optional<Token> ConllReader::parse_line(std::string_view line, bool& ok) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto cols = split_tabs(line);
  const bool conllu = options_.layout == ConllLayout::kConllU;
  if (conllu ? cols.size() != 10 : cols.size() < 12) {
    log_.error(line_no_, std::string("expected ") + (conllu ? "10" : "at least 12") +
                             " columns, found " + std::to_string(cols.size()));
    ok = false;
    return std::nullopt;
  }
  if (is_non_token_id(cols[0])) return std::nullopt;

  Token tok;
  if (!parse_int(cols[0], tok.index)) {
    log_.error(line_no_, "token index is not an integer: '" + std::string(cols[0]) + "'");
    ok = false;
    return std::nullopt;
  }
  tok.form = std::string(cols[1]);
  std::string_view head_col;
  if (conllu) {
    tok.lemma = field(cols[2]);
    tok.upos = field(cols[3]);
    tok.pos = field(cols[4]);
    tok.morph = MorphFeatures::parse(cols[5]);
    head_col = cols[6];
    tok.deprel = field(cols[7]);
    tok.deps = field(cols[8]);
    tok.misc = field(cols[9]);
  } else {
    auto gold_or_pred = [&](std::size_t gold) {
      return cols[gold] != "_" ? cols[gold] : cols[gold + 1];
    };
    tok.lemma = field(gold_or_pred(2));
    tok.pos = field(gold_or_pred(4));
    tok.morph = MorphFeatures::parse(gold_or_pred(6));
    head_col = gold_or_pred(8);
    tok.deprel = field(gold_or_pred(10));
  }
  if (!parse_int(head_col, tok.head)) {
    log_.error(line_no_, "head is not an integer: '" + std::string(head_col) + "'");
    ok = false;
    return std::nullopt;
  }
  return tok;
}

void ConllReader::finish_block(SentenceBlock& block, std::vector<Token>& tokens, bool block_ok) {
  const std::string id = pending_id_.empty()
                             ? options_.doc_id + "-" + std::to_string(block.ordinal)
                             : pending_id_;
  pending_id_.clear();
  if (!block_ok) {
    log_.error(block.first_line, "sentence " + id + " rejected");
    return;
  }
  const int n = static_cast<int>(tokens.size());
  if (n == 0) {
    log_.error(block.first_line, "sentence " + id + " has no tokens");
    return;
  }
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    const std::size_t line = block.first_line + static_cast<std::size_t>(i);
    if (t.index != i + 1) {
      log_.error(line, "sentence " + id + ": token index " + std::to_string(t.index) +
                           " out of sequence (expected " + std::to_string(i + 1) + ")");
      return;
    }
    if (t.head < 0 || t.head > n) {
      log_.error(line, "sentence " + id + ": head " + std::to_string(t.head) +
                           " outside sentence of length " + std::to_string(n));
      return;
    }
    if (t.head == t.index) {
      log_.warn(line, "sentence " + id + ": token " + std::to_string(t.index) +
                          " is its own head; sentence skipped");
      return;
    }
    if (t.head == 0) ++roots;
  }
  if (const int c = find_cycle(tokens); c != 0) {
    log_.warn(block.first_line, "sentence " + id + ": head cycle through token " +
                                    std::to_string(c) + "; sentence skipped");
    return;
  }
  if (roots > 1) {
    log_.warn(block.first_line,
              "sentence " + id + " has " + std::to_string(roots) + " root tokens");
  }
  Sentence s;
  s.id = id;
  s.language = language_;
  s.tokens = std::move(tokens);
  block.sentence = std::move(s);
}

std::optional<SentenceBlock> ConllReader::next() {
  std::string line;
  std::vector<Token> tokens;
  bool block_ok = true;
  bool started = false;
  SentenceBlock block;
  while (std::getline(in_, line)) {
    ++line_no_;
    std::string_view view(line);
    if (is_blank(view)) {
      if (started) break;
      continue;
    }
    if (view.front() == '#') {
      const auto body = trim(view.substr(1));
      if (body.rfind("sent_id", 0) == 0) {
        const auto eq = body.find('=');
        if (eq != std::string_view::npos) pending_id_ = std::string(trim(body.substr(eq + 1)));
      }
      continue;
    }
    if (!started) {
      started = true;
      block.first_line = line_no_;
      block.ordinal = ++ordinal_;
    }
    bool ok = true;
    auto tok = parse_line(view, ok);
    if (!ok) block_ok = false;
    if (tok) tokens.push_back(std::move(*tok));
  }
  if (!started) return std::nullopt;
  finish_block(block, tokens, block_ok);
  return block;
}

ConllParseResult parse_conll(std::istream& in, Language language, ConllOptions options) {
  ConllReader reader(in, language, std::move(options));
  ConllParseResult result;
  while (auto block = reader.next()) {
    if (block->sentence) result.sentences.push_back(std::move(*block->sentence));
  }
  result.log = reader.log();
  return result;
}

ConllParseResult parse_conll(std::string_view text, Language language, ConllOptions options) {
  std::istringstream in{std::string(text)};
  return parse_conll(in, language, std::move(options));
}

void write_conll(std::ostream& out, const std::vector<Sentence>& sentences, ConllLayout layout) {
  for (const Sentence& s : sentences) {
    out << "# sent_id = " << s.id << '\n';
    for (const Token& t : s.tokens) {
      const std::string feats = t.morph.to_string();
      if (layout == ConllLayout::kConllU) {
        out << t.index << '\t' << t.form << '\t' << or_underscore(t.lemma) << '\t'
            << or_underscore(t.upos) << '\t' << or_underscore(t.pos) << '\t' << feats << '\t'
            << t.head << '\t' << or_underscore(t.deprel) << '\t' << or_underscore(t.deps)
            << '\t' << or_underscore(t.misc) << '\n';
      } else {
        const auto lemma = or_underscore(t.lemma);
        const auto pos = or_underscore(t.pos);
        const auto rel = or_underscore(t.deprel);
        out << t.index << '\t' << t.form << '\t' << lemma << '\t' << lemma << '\t' << pos << '\t'
            << pos << '\t' << feats << '\t' << feats << '\t' << t.head << '\t' << t.head << '\t'
            << rel << '\t' << rel << "\t_\t_\n";
      }
    }
    out << '\n';
  }
}

}  // namespace tmv
