#include "tmv/alignment.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "tmv/morph.hpp"

namespace tmv {

namespace {

bool parse_non_negative(std::string_view text, int& out) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::optional<Indexing> parse_indexing(std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "0" || t == "zero" || t == "zero_based" || t == "zero-based") return Indexing::kZeroBased;
  if (t == "1" || t == "one" || t == "one_based" || t == "one-based") return Indexing::kOneBased;
  return std::nullopt;
}

void AlignmentSet::insert(int en, int de) {
  const Link link{en, de};
  auto it = std::lower_bound(links.begin(), links.end(), link);
  if (it == links.end() || *it != link) links.insert(it, link);
}

bool AlignmentSet::contains(int en, int de) const {
  return std::binary_search(links.begin(), links.end(), Link{en, de});
}

AlignmentReader::AlignmentReader(std::istream& in, Indexing indexing)
    : in_(in), indexing_(indexing) {}

std::optional<AlignmentSet> AlignmentReader::next() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  ++line_no_;
  AlignmentSet set;
  set.id = std::to_string(line_no_);
  const int shift = indexing_ == Indexing::kZeroBased ? 1 : 0;
  std::istringstream tokens(line);
  std::string tok;
  while (tokens >> tok) {
    const auto dash = tok.find('-');
    int en = 0;
    int de = 0;
    if (dash == std::string::npos ||
        !parse_non_negative(std::string_view(tok).substr(0, dash), en) ||
        !parse_non_negative(std::string_view(tok).substr(dash + 1), de)) {
      log_.error(line_no_, "malformed alignment link '" + tok + "' (expected int-int)");
      continue;
    }
    en += shift;
    de += shift;
    if (en < 1 || de < 1) {
      log_.error(line_no_, "alignment link '" + tok + "' is below the one-based minimum");
      continue;
    }
    set.insert(en, de);
  }
  return set;
}

AlignmentParseResult parse_alignment(std::istream& in, Indexing indexing) {
  AlignmentReader reader(in, indexing);
  AlignmentParseResult result;
  while (auto set = reader.next()) result.sets.push_back(std::move(*set));
  result.log = reader.log();
  return result;
}

AlignmentParseResult parse_alignment(std::string_view text, Indexing indexing) {
  std::istringstream in{std::string(text)};
  return parse_alignment(in, indexing);
}

std::string format_alignment(const AlignmentSet& set, Indexing indexing) {
  const int shift = indexing == Indexing::kZeroBased ? 1 : 0;
  std::string out;
  for (const auto& [en, de] : set.links) {
    if (!out.empty()) out += ' ';
    out += std::to_string(en - shift) + "-" + std::to_string(de - shift);
  }
  return out;
}

}  // namespace tmv
