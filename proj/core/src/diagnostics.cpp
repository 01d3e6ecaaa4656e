#include "tmv/diagnostics.hpp"

#include <algorithm>

namespace tmv {

std::string format(const Diagnostic& d) {
  std::string out = d.severity == Severity::kError ? "error: " : "warning: ";
  if (!d.source.empty()) out += d.source + ": ";
  if (d.line > 0) out += "line " + std::to_string(d.line) + ": ";
  out += d.message;
  return out;
}

void DiagnosticLog::warn(std::size_t line, std::string message) {
  entries_.push_back({Severity::kWarning, line, std::move(message), {}});
}

void DiagnosticLog::error(std::size_t line, std::string message) {
  entries_.push_back({Severity::kError, line, std::move(message), {}});
}

void DiagnosticLog::append(const DiagnosticLog& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void DiagnosticLog::append(const DiagnosticLog& other, const std::string& source) {
  for (Diagnostic d : other.entries_) {
    if (d.source.empty()) d.source = source;
    entries_.push_back(std::move(d));
  }
}

std::size_t DiagnosticLog::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const auto& d) { return d.severity == Severity::kError; }));
}

std::size_t DiagnosticLog::warning_count() const {
  return entries_.size() - error_count();
}

}  // namespace tmv
