#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tmv/label.hpp"

namespace tmv {

/// One usage category of a tense with an example per language. A
/// `*_redirect` example is rendered in another tense in that language.
struct TenseUse {
  std::string category;
  std::string german;
  bool german_redirect = false;
  std::string english;
  bool english_redirect = false;
};

/// One line of the English/German tense correspondence inventory.
struct CorrespondenceRow {
  std::string morph_tense;  // present, past, present*, past*
  std::optional<Tense> english;
  std::string english_name;
  std::string english_examples;
  std::optional<Tense> german;
  std::string german_name;
  std::string german_examples;
};

struct Explanation {
  std::string title;
  std::vector<TenseUse> uses;
  std::vector<CorrespondenceRow> rows;
  std::string note;

  [[nodiscard]] std::string render() const;
};

class UnknownLabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Usage categories for one tense plus its correspondence row(s).
Explanation explain(std::string_view label);
/// Correspondence row(s) linking an English and a German tense.
Explanation explain(std::string_view english_label, std::string_view german_label);

const std::vector<CorrespondenceRow>& correspondence_rows();
/// Every name `explain` accepts, one canonical spelling per tense.
std::vector<std::string> valid_labels();

}  // namespace tmv
