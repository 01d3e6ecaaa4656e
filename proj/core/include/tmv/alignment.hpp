#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmv/diagnostics.hpp"

namespace tmv {

enum class Indexing { kZeroBased, kOneBased };

std::optional<Indexing> parse_indexing(std::string_view text);

/// Word links of one sentence pair. Indices are 1-based token indices
/// (English side first, German side second).
struct AlignmentSet {
  using Link = std::pair<int, int>;

  std::string id;
  std::vector<Link> links;  // sorted, unique

  void insert(int en, int de);
  [[nodiscard]] bool contains(int en, int de) const;

  friend bool operator==(const AlignmentSet&, const AlignmentSet&) = default;
};

/// Streaming reader for Pharaoh-style `i-j` alignment lines.
class AlignmentReader {
 public:
  AlignmentReader(std::istream& in, Indexing indexing);

  /// The next line's links; malformed tokens are dropped and reported.
  std::optional<AlignmentSet> next();

  [[nodiscard]] const DiagnosticLog& log() const { return log_; }

 private:
  std::istream& in_;
  Indexing indexing_;
  DiagnosticLog log_;
  std::size_t line_no_ = 0;
};

struct AlignmentParseResult {
  std::vector<AlignmentSet> sets;
  DiagnosticLog log;
};

AlignmentParseResult parse_alignment(std::istream& in,
                                     Indexing indexing = Indexing::kZeroBased);
AlignmentParseResult parse_alignment(std::string_view text,
                                     Indexing indexing = Indexing::kZeroBased);

/// Serialises links as one Pharaoh line (no trailing newline).
std::string format_alignment(const AlignmentSet& set,
                             Indexing indexing = Indexing::kZeroBased);

}  // namespace tmv
