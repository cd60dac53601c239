// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treeidx/error.hpp"

namespace treeidx {

/// Minimal s-expression reader: atoms, "strings", nested lists, ';' comments.
struct SExpr {
  enum class Kind { Atom, String, List };

  Kind kind = Kind::Atom;
  std::string text;  ///< atom or string contents
  std::vector<SExpr> items;
  std::size_t line = 0;

  bool is_atom() const noexcept { return kind == Kind::Atom; }
  bool is_string() const noexcept { return kind == Kind::String; }
  bool is_list() const noexcept { return kind == Kind::List; }
  bool is_atom(std::string_view s) const noexcept { return kind == Kind::Atom && text == s; }
  /// First element's atom text, or "" for an empty list / non-list.
  std::string_view head() const noexcept {
    return is_list() && !items.empty() && items[0].is_atom() ? std::string_view(items[0].text) : std::string_view{};
  }
};

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

namespace detail {

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) return out;
      out.push_back(read());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  SExpr read() {
    skip_space();
    if (pos_ == text_.size()) parse_fail(line_, "unexpected end of input");
    const char c = text_[pos_];
    SExpr node;
    node.line = line_;
    if (c == '(') {
      ++pos_;
      node.kind = SExpr::Kind::List;
      while (true) {
        skip_space();
        if (pos_ == text_.size()) parse_fail(node.line, "unbalanced '('");
        if (text_[pos_] == ')') {
          ++pos_;
          return node;
        }
        node.items.push_back(read());
      }
    }
    if (c == ')') parse_fail(line_, "unexpected ')'");
    if (c == '"') {
      ++pos_;
      node.kind = SExpr::Kind::String;
      while (true) {
        if (pos_ == text_.size()) parse_fail(node.line, "unterminated string");
        const char s = text_[pos_++];
        if (s == '"') return node;
        if (s == '\\' && pos_ < text_.size()) {
          node.text.push_back(text_[pos_++]);
          continue;
        }
        if (s == '\n') ++line_;
        node.text.push_back(s);
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char a = text_[pos_];
      if (a == '(' || a == ')' || a == '"' || a == ';' || a == ' ' || a == '\t' || a == '\n' || a == '\r') break;
      ++pos_;
    }
    node.text = std::string(text_.substr(start, pos_ - start));
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace detail

inline std::vector<SExpr> read_sexprs(std::string_view text) { return detail::SExprReader(text).read_all(); }

inline std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace treeidx
