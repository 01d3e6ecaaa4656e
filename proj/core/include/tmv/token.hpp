#pragma once

#include <string>
#include <vector>

#include "tmv/morph.hpp"
#include "tmv/types.hpp"

namespace tmv {

struct Token {
  int index = 0;  // 1-based
  std::string form;
  std::string lemma;
  std::string upos;  // coarse tag; empty in CoNLL-2009 input
  std::string pos;   // fine tag (Penn Treebank / STTS)
  MorphFeatures morph;
  int head = 0;  // 0 = artificial root
  std::string deprel;
  std::string deps;
  std::string misc;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::string id;
  Language language = Language::kEnglish;
  std::vector<Token> tokens;

  [[nodiscard]] int size() const { return static_cast<int>(tokens.size()); }
  /// 1-based access.
  [[nodiscard]] const Token& at(int index) const { return tokens.at(index - 1); }
  [[nodiscard]] std::vector<int> children(int index) const;
};

}  // namespace tmv
