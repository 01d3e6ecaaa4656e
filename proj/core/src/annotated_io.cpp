#include "tmv/annotated_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

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
  while (start <= text.size()) {
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

}  // namespace

std::string format_annotated_row(const Sentence& s, const LabeledVC& v) {
  const Token& main = s.at(v.vc.main_verb);
  std::string lemma = main.lemma.empty() ? tags::lemma_of(main, s.language) : main.lemma;
  std::ostringstream row;
  row << s.id << '\t' << join_indices(v.vc.members) << '\t' << main.form << '\t' << lemma << '\t'
      << tense_name(v.label.tense) << '\t' << to_string(v.label.mood) << '\t'
      << to_string(v.label.voice) << '\t' << to_string(v.label.finiteness) << '\t'
      << (v.label.progressive ? 1 : 0);
  return row.str();
}

AnnotatedWriter::AnnotatedWriter(std::ostream& out) : out_(out) {
  out_ << kAnnotatedHeader << '\n';
}

void AnnotatedWriter::write(const AnnotatedSentence& s) {
  ++sentences_;
  for (const auto& v : s.vcs) {
    out_ << format_annotated_row(s.sentence, v) << '\n';
    ++rows_;
  }
  if (!out_) throw std::ios_base::failure("annotated output: write failed");
}

void AnnotatedWriter::finish() {
  if (finished_) return;
  finished_ = true;
  out_ << "# sentences=" << sentences_ << " vcs=" << rows_ << '\n';
  out_.flush();
  if (!out_) throw std::ios_base::failure("annotated output: write failed");
}

void write_annotated(const std::vector<AnnotatedSentence>& sentences, std::ostream& sink) {
  AnnotatedWriter writer(sink);
  for (const auto& s : sentences) writer.write(s);
  writer.finish();
}

AnnotatedReadResult read_annotated(std::istream& in) {
  AnnotatedReadResult result;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line == kAnnotatedHeader) continue;
    const auto f = split_tabs(line);
    if (f.size() != 9) {
      result.log.error(lineno, "expected 9 columns, found " + std::to_string(f.size()));
      continue;
    }
    AnnotatedRecord r;
    r.sentence_id = std::string(f[0]);
    auto members = parse_indices(f[1]);
    if (!members) {
      result.log.error(lineno, "bad token index list '" + std::string(f[1]) + "'");
      continue;
    }
    r.members = std::move(*members);
    r.main_verb_form = std::string(f[2]);
    r.main_verb_lemma = std::string(f[3]);
    const auto tense = lookup_tense(f[4]);
    const auto mood = parse_mood(f[5]);
    const auto voice = parse_voice(f[6]);
    const auto fin = parse_finiteness(f[7]);
    if (!tense || !mood || !voice || !fin || (f[8] != "0" && f[8] != "1")) {
      result.log.error(lineno, "unrecognised label fields");
      continue;
    }
    r.label.tense = *tense;
    r.label.language = language_of(*tense);
    r.label.mood = *mood;
    r.label.voice = *voice;
    r.label.finiteness = *fin;
    r.label.progressive = f[8] == "1";
    result.records.push_back(std::move(r));
  }
  return result;
}

}  // namespace tmv
