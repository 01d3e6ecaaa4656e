#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tmv {

enum class Severity { kWarning, kError };

/// A recoverable problem found while reading input. `line` is 1-based;
/// 0 means the problem is not tied to a line.
struct Diagnostic {
  Severity severity = Severity::kError;
  std::size_t line = 0;
  std::string message;
  /// Input the line number refers to (file or stream name); may be empty.
  std::string source;
};

std::string format(const Diagnostic& d);

class DiagnosticLog {
 public:
  void warn(std::size_t line, std::string message);
  void error(std::size_t line, std::string message);
  void append(const DiagnosticLog& other);
  /// Appends with `source` filled in where the entry has none.
  void append(const DiagnosticLog& other, const std::string& source);

  [[nodiscard]] const std::vector<Diagnostic>& entries() const { return entries_; }
  [[nodiscard]] std::size_t error_count() const;
  [[nodiscard]] std::size_t warning_count() const;
  [[nodiscard]] bool has_errors() const { return error_count() > 0; }

 private:
  std::vector<Diagnostic> entries_;
};

}  // namespace tmv
