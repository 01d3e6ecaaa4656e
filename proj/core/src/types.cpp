#include "tmv/types.hpp"

#include "tmv/morph.hpp"

namespace tmv {

std::string_view to_string(Language lang) {
  return lang == Language::kEnglish ? "en" : "de";
}

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::kChain ? "chain" : "ud";
}

std::optional<Language> parse_language(std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "en" || t == "eng" || t == "english") return Language::kEnglish;
  if (t == "de" || t == "deu" || t == "ger" || t == "german") return Language::kGerman;
  return std::nullopt;
}

std::optional<Scheme> parse_scheme(std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "chain") return Scheme::kChain;
  if (t == "ud") return Scheme::kUd;
  return std::nullopt;
}

}  // namespace tmv
