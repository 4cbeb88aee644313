#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "levelone/alphabet.hpp"

namespace levelone {

  // Abstract syntax of a pattern. Concat and Union carry two or more
  // children, Star and Plus exactly one, the others none.
  struct PatternNode {
    enum class Kind { empty, epsilon, letter, concat, alternation, star, plus };

    Kind                     kind   = Kind::empty;
    char                     symbol = 0;
    std::vector<PatternNode> children;

    bool operator==(PatternNode const&) const = default;

    static PatternNode empty() {
      return {Kind::empty, 0, {}};
    }
    static PatternNode epsilon() {
      return {Kind::epsilon, 0, {}};
    }
    static PatternNode letter(char c) {
      return {Kind::letter, c, {}};
    }
    static PatternNode concat(std::vector<PatternNode> parts) {
      return {Kind::concat, 0, std::move(parts)};
    }
    static PatternNode alternation(std::vector<PatternNode> parts) {
      return {Kind::alternation, 0, std::move(parts)};
    }
    static PatternNode star(PatternNode child) {
      return {Kind::star, 0, {std::move(child)}};
    }
    static PatternNode plus(PatternNode child) {
      return {Kind::plus, 0, {std::move(child)}};
    }
  };

  struct Pattern {
    Alphabet    alphabet;
    PatternNode root;

    bool operator==(Pattern const&) const = default;
  };

  // Grammar: `∅` or `%` (empty language), `_` (empty word), alphabet symbols,
  // juxtaposition, `|`, postfix `*` and `+`, parentheses. Blanks are ignored.
  // Precedence: postfix > concatenation > union.
  Pattern parse_pattern(std::string_view text, Alphabet const& alphabet);

  // Prints with the minimum parentheses the precedence rules need.
  std::string to_string(PatternNode const& node);
  inline std::string to_string(Pattern const& p) {
    return to_string(p.root);
  }

}  // namespace levelone
