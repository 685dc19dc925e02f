#pragma once

// Regular expression syntax accepted for specifying languages:
//
//   union      ::= concat ('|' concat)*
//   concat     ::= repetition*            (empty concat denotes the empty word)
//   repetition ::= atom ('*' | '+' | '?')*
//   atom       ::= literal | '\' any | '[' class ']' | '(' union ')'
//   class      ::= (item | item '-' item)+
//
// There are no anchors, no backreferences and no bounded repetition, so the
// recognized class is exactly the regular languages.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "regans/alphabet.hpp"
#include "regans/error.hpp"

namespace regans {

struct RegexNode {
  enum class Kind { Empty, Literal, Class, Concat, Union, Star, Plus, Optional };

  Kind kind = Kind::Empty;
  /// Symbols matched by a Literal (exactly one) or a Class (one or more),
  /// kept in alphabet order without duplicates.
  std::vector<Symbol> symbols;
  std::vector<RegexNode> children;

  static RegexNode empty() { return {}; }
  static RegexNode literal(Symbol s) { return {Kind::Literal, {s}, {}}; }
  static RegexNode unary(Kind kind, RegexNode child) {
    RegexNode node{kind, {}, {}};
    node.children.push_back(std::move(child));
    return node;
  }
};

using RegexAst = RegexNode;

/// S-expression rendering, e.g. `star(union(lit(a),concat(lit(b),lit(a))))`.
inline std::string to_string(const RegexNode& node) {
  auto list = [&](std::string_view name) {
    std::string out(name);
    out += '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i) out += ',';
      out += to_string(node.children[i]);
    }
    return out + ')';
  };
  switch (node.kind) {
    case RegexNode::Kind::Empty:
      return "eps";
    case RegexNode::Kind::Literal:
      return "lit(" + std::string(1, static_cast<char>(node.symbols.front())) + ")";
    case RegexNode::Kind::Class:
      return "class(" + std::string(node.symbols.begin(), node.symbols.end()) + ")";
    case RegexNode::Kind::Concat:
      return list("concat");
    case RegexNode::Kind::Union:
      return list("union");
    case RegexNode::Kind::Star:
      return list("star");
    case RegexNode::Kind::Plus:
      return list("plus");
    case RegexNode::Kind::Optional:
      return list("opt");
  }
  return {};
}

namespace detail {

class RegexParser {
 public:
  RegexParser(std::string_view text, const OrderedAlphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  RegexNode parse() {
    RegexNode root = parse_union();
    if (pos_ < text_.size()) {
      // The only way parse_union stops early is an unmatched ')'.
      throw SyntaxError("unmatched ')'", pos_);
    }
    return root;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  RegexNode parse_union() {
    std::vector<RegexNode> branches;
    branches.push_back(parse_concat());
    while (!at_end() && peek() == '|') {
      ++pos_;
      branches.push_back(parse_concat());
    }
    if (branches.size() == 1) return std::move(branches.front());
    return {RegexNode::Kind::Union, {}, std::move(branches)};
  }

  RegexNode parse_concat() {
    std::vector<RegexNode> items;
    while (!at_end() && peek() != '|' && peek() != ')') {
      items.push_back(parse_repetition());
    }
    if (items.empty()) return RegexNode::empty();
    if (items.size() == 1) return std::move(items.front());
    return {RegexNode::Kind::Concat, {}, std::move(items)};
  }

  RegexNode parse_repetition() {
    RegexNode node = parse_atom();
    while (!at_end()) {
      RegexNode::Kind kind;
      switch (peek()) {
        case '*': kind = RegexNode::Kind::Star; break;
        case '+': kind = RegexNode::Kind::Plus; break;
        case '?': kind = RegexNode::Kind::Optional; break;
        default: return node;
      }
      ++pos_;
      node = RegexNode::unary(kind, std::move(node));
    }
    return node;
  }

  RegexNode parse_atom() {
    const std::size_t start = pos_;
    const char c = peek();
    switch (c) {
      case '(': {
        ++pos_;
        RegexNode inner = parse_union();
        if (at_end() || peek() != ')') throw SyntaxError("expected ')'", pos_);
        ++pos_;
        return inner;
      }
      case '[':
        return parse_class();
      case '*':
      case '+':
      case '?':
        throw SyntaxError(std::string("nothing to repeat before '") + c + "'", start);
      case ']':
        throw SyntaxError("unmatched ']'", start);
      case '\\':
        ++pos_;
        if (at_end()) throw SyntaxError("dangling escape", start);
        [[fallthrough]];
      default:
        ++pos_;
        return RegexNode::literal(member(static_cast<Symbol>(text_[pos_ - 1]), pos_ - 1));
    }
  }

  RegexNode parse_class() {
    const std::size_t open = pos_++;
    std::vector<bool> in_class(256, false);
    bool any = false;
    while (true) {
      if (at_end()) throw SyntaxError("unterminated character class", open);
      if (peek() == ']' && any) {
        ++pos_;
        break;
      }
      const std::size_t lo_at = pos_;
      const Symbol lo = class_item();
      Symbol hi = lo;
      if (pos_ + 1 < text_.size() && peek() == '-' && text_[pos_ + 1] != ']') {
        ++pos_;
        hi = class_item();
        if (hi < lo) throw SyntaxError("inverted range in character class", lo_at);
      }
      for (int s = lo; s <= hi; ++s) {
        member(static_cast<Symbol>(s), lo_at);
        in_class[s] = true;
      }
      any = true;
    }
    RegexNode node{RegexNode::Kind::Class, {}, {}};
    for (Symbol s : alphabet_.symbols()) {
      if (in_class[s]) node.symbols.push_back(s);
    }
    if (node.symbols.size() == 1) node.kind = RegexNode::Kind::Literal;
    return node;
  }

  Symbol class_item() {
    if (peek() == '\\') {
      ++pos_;
      if (at_end()) throw SyntaxError("dangling escape", pos_ - 1);
    }
    return static_cast<Symbol>(text_[pos_++]);
  }

  Symbol member(Symbol s, std::size_t at) const {
    if (!alphabet_.contains(s)) {
      throw AlphabetError("symbol " + OrderedAlphabet::describe(s) + " at offset " +
                          std::to_string(at) + " is not in the alphabet");
    }
    return s;
  }

  std::string_view text_;
  const OrderedAlphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RegexAst parse_regex(std::string_view text, const OrderedAlphabet& alphabet) {
  return detail::RegexParser(text, alphabet).parse();
}

}  // namespace regans
