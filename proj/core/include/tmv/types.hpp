#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmv {

enum class Language { kEnglish, kGerman };

/// Dependency annotation scheme of the input parses.
///
/// `kChain` is the CoNLL-2008/2009 style used by Mate-type parsers, where
/// auxiliaries govern their complements through VC (English) or OC (German)
/// arcs. `kUd` is Universal Dependencies, where auxiliaries attach to the
/// lexical predicate as `aux`, `aux:pass` or `cop`.
enum class Scheme { kChain, kUd };

std::string_view to_string(Language lang);
std::string_view to_string(Scheme scheme);

std::optional<Language> parse_language(std::string_view text);
std::optional<Scheme> parse_scheme(std::string_view text);

/// Thrown for unrecoverable input problems (unreadable files, broken
/// record structure in our own formats).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tmv
