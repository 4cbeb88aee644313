#include "levelone/pattern.hpp"

#include "levelone/error.hpp"

namespace levelone {

  namespace {

    constexpr std::string_view kEmptySetUtf8 = "\xE2\x88\x85";  // ∅

    class Parser {
     public:
      Parser(std::string_view text, Alphabet const& alphabet)
          : text_(text), alphabet_(alphabet) {}

      PatternNode parse() {
        PatternNode root = parse_union();
        skip_blanks();
        if (pos_ < text_.size()) {
          if (text_[pos_] == ')') {
            throw ParseError("unbalanced ')'", pos_);
          }
          throw ParseError("unexpected character", pos_);
        }
        return root;
      }

     private:
      void skip_blanks() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
          ++pos_;
        }
      }

      bool at_atom_start() {
        skip_blanks();
        if (pos_ >= text_.size()) {
          return false;
        }
        char c = text_[pos_];
        return c == '(' || c == '_' || c == '%' || Alphabet::is_valid_symbol(c)
               || text_.substr(pos_).starts_with(kEmptySetUtf8);
      }

      PatternNode parse_union() {
        std::vector<PatternNode> parts;
        parts.push_back(parse_concat());
        skip_blanks();
        while (pos_ < text_.size() && text_[pos_] == '|') {
          ++pos_;
          parts.push_back(parse_concat());
          skip_blanks();
        }
        if (parts.size() == 1) {
          return std::move(parts.front());
        }
        return PatternNode::alternation(std::move(parts));
      }

      PatternNode parse_concat() {
        std::vector<PatternNode> parts;
        while (at_atom_start()) {
          parts.push_back(parse_postfix());
        }
        if (parts.empty()) {
          throw ParseError("expected an expression", pos_);
        }
        if (parts.size() == 1) {
          return std::move(parts.front());
        }
        return PatternNode::concat(std::move(parts));
      }

      PatternNode parse_postfix() {
        PatternNode node = parse_atom();
        skip_blanks();
        while (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '+')) {
          node = text_[pos_] == '*' ? PatternNode::star(std::move(node))
                                    : PatternNode::plus(std::move(node));
          ++pos_;
          skip_blanks();
        }
        return node;
      }

      PatternNode parse_atom() {
        skip_blanks();
        std::size_t start = pos_;
        if (text_.substr(pos_).starts_with(kEmptySetUtf8)) {
          pos_ += kEmptySetUtf8.size();
          return PatternNode::empty();
        }
        char c = text_[pos_];
        if (c == '%') {
          ++pos_;
          return PatternNode::empty();
        }
        if (c == '_') {
          ++pos_;
          return PatternNode::epsilon();
        }
        if (c == '(') {
          ++pos_;
          PatternNode inner = parse_union();
          skip_blanks();
          if (pos_ >= text_.size() || text_[pos_] != ')') {
            throw ParseError("unbalanced '(' opened", start);
          }
          ++pos_;
          return inner;
        }
        if (!alphabet_.contains(c)) {
          throw ParseError(std::string("undeclared symbol '") + c + "'", start);
        }
        ++pos_;
        return PatternNode::letter(c);
      }

      std::string_view text_;
      Alphabet const&  alphabet_;
      std::size_t      pos_ = 0;
    };

    int precedence(PatternNode const& node) {
      switch (node.kind) {
        case PatternNode::Kind::alternation:
          return 0;
        case PatternNode::Kind::concat:
          return 1;
        default:
          return 2;
      }
    }

    void print(PatternNode const& node, std::string& out, int context) {
      bool parens = precedence(node) < context;
      if (parens) {
        out += '(';
      }
      switch (node.kind) {
        case PatternNode::Kind::empty:
          out += "%";
          break;
        case PatternNode::Kind::epsilon:
          out += "_";
          break;
        case PatternNode::Kind::letter:
          out += node.symbol;
          break;
        case PatternNode::Kind::concat:
          for (auto const& child : node.children) {
            // nested concatenations need parentheses to keep the tree shape
            print(child, out, child.kind == PatternNode::Kind::concat ? 2 : 1);
          }
          break;
        case PatternNode::Kind::alternation:
          for (std::size_t i = 0; i < node.children.size(); ++i) {
            if (i > 0) {
              out += '|';
            }
            auto const& child = node.children[i];
            print(child, out, child.kind == PatternNode::Kind::alternation ? 1 : 0);
          }
          break;
        case PatternNode::Kind::star:
        case PatternNode::Kind::plus:
          print(node.children.front(), out, 2);
          out += node.kind == PatternNode::Kind::star ? '*' : '+';
          break;
      }
      if (parens) {
        out += ')';
      }
    }

  }  // namespace

  Pattern parse_pattern(std::string_view text, Alphabet const& alphabet) {
    return Pattern{alphabet, Parser(text, alphabet).parse()};
  }

  std::string to_string(PatternNode const& node) {
    std::string out;
    print(node, out, 0);
    return out;
  }

}  // namespace levelone
