#include "tmv/morph.hpp"

#include <algorithm>
#include <cctype>

namespace tmv {

namespace {

// ASCII lower-casing plus the German umlauts, which appear in forms the
// lexicons are keyed on (Würde, Hätte at sentence start).
void lower_utf8_umlauts(std::string& s) {
  static const std::pair<std::string_view, std::string_view> kMap[] = {
      {"\xC3\x84", "\xC3\xA4"}, {"\xC3\x96", "\xC3\xB6"}, {"\xC3\x9C", "\xC3\xBC"}};
  for (const auto& [upper, lower] : kMap) {
    std::size_t pos = 0;
    while ((pos = s.find(upper, pos)) != std::string::npos) {
      s.replace(pos, upper.size(), lower);
      pos += lower.size();
    }
  }
}

}  // namespace

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
  });
  lower_utf8_umlauts(out);
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && to_lower(a) == to_lower(b);
}

MorphFeatures MorphFeatures::parse(std::string_view column) {
  MorphFeatures m;
  if (column.empty() || column == "_") return m;
  std::size_t start = 0;
  while (start <= column.size()) {
    std::size_t end = column.find('|', start);
    if (end == std::string_view::npos) end = column.size();
    std::string_view item = column.substr(start, end - start);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        m.add({}, std::string(item));
      } else {
        m.add(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
      }
    }
    start = end + 1;
  }
  return m;
}

void MorphFeatures::add(std::string key, std::string value) {
  items_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> MorphFeatures::get(std::string_view key) const {
  for (const auto& [k, v] : items_) {
    if (!k.empty() && iequals(k, key)) return v;
  }
  return std::nullopt;
}

bool MorphFeatures::has(std::string_view key, std::string_view value) const {
  for (const auto& [k, v] : items_) {
    if (k.empty() ? iequals(v, value) : (iequals(k, key) && iequals(v, value))) return true;
  }
  return false;
}

bool MorphFeatures::has_bare(std::string_view value) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const Item& i) { return i.first.empty() && iequals(i.second, value); });
}

std::string MorphFeatures::to_string() const {
  if (items_.empty()) return "_";
  std::string out;
  for (const auto& [k, v] : items_) {
    if (!out.empty()) out += '|';
    if (!k.empty()) {
      out += k;
      out += '=';
    }
    out += v;
  }
  return out;
}

}  // namespace tmv
