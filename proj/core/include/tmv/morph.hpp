#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tmv {

/// Morphological feature bundle as read from a FEATS column.
///
/// Items keep their original spelling and order so that writing a token
/// back out reproduces the column. Items without `=` (the bare
/// `sg|3|pres|ind` style some German models emit) are stored with an empty
/// key. Lookups are case-insensitive on both key and value.
class MorphFeatures {
 public:
  using Item = std::pair<std::string, std::string>;

  MorphFeatures() = default;

  static MorphFeatures parse(std::string_view column);

  void add(std::string key, std::string value);
  [[nodiscard]] std::optional<std::string> get(std::string_view key) const;
  /// True if `key` is present with `value`, or a bare item equals `value`.
  [[nodiscard]] bool has(std::string_view key, std::string_view value) const;
  [[nodiscard]] bool has_bare(std::string_view value) const;

  [[nodiscard]] bool empty() const { return items_.empty(); }
  [[nodiscard]] const std::vector<Item>& items() const { return items_; }

  /// `_` for an empty bundle.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MorphFeatures&, const MorphFeatures&) = default;

 private:
  std::vector<Item> items_;
};

std::string to_lower(std::string_view text);
bool iequals(std::string_view a, std::string_view b);

}  // namespace tmv
