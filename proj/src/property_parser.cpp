// Copyright 2026 The topl-automata Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "topl/errors.hpp"
#include "topl/property.hpp"

namespace topl {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool glob_char(char c) {
  return ident_char(c) || c == '$' || c == '.' || c == '*' || c == '<' ||
         c == '>' || c == '-';
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t base)
      : text_(text), line_(line), base_(base) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    skip_ws();
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const char next = peek(word.size());
    if (!std::isspace(static_cast<unsigned char>(next))) return false;
    pos_ += word.size();
    return true;
  }
  std::string ident() {
    if (!ident_start(peek())) fail("expected identifier");
    const std::size_t begin = pos_;
    while (ident_char(peek())) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }
  std::string_view rest() const { return text_.substr(std::min(pos_, text_.size())); }

  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, base_ + pos_ + 1, what);
  }

  std::optional<Pattern> try_pattern() {
    const std::size_t begin = pos_;
    const char c = peek();
    if (c == '*') {
      ++pos_;
      return Pattern{Pattern::Kind::wildcard, ""};
    }
    if (c == '"' || c == '\'') {
      ++pos_;
      std::string value;
      while (!done() && peek() != c) value += text_[pos_++];
      if (done()) {
        pos_ = begin;
        fail("unterminated literal");
      }
      ++pos_;
      return Pattern{Pattern::Kind::literal, value};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (ident_char(peek())) ++pos_;
      return Pattern{Pattern::Kind::literal,
                     std::string(text_.substr(begin, pos_ - begin))};
    }
    if (c == '!' && ident_start(peek(1))) {
      ++pos_;
      return Pattern{Pattern::Kind::not_read, lower(ident())};
    }
    if (ident_start(c)) {
      const std::string name = ident();
      const bool upper = std::isupper(static_cast<unsigned char>(name[0]));
      return Pattern{upper ? Pattern::Kind::bind : Pattern::Kind::read,
                     lower(name)};
    }
    return std::nullopt;
  }

  Pattern pattern() {
    skip_ws();
    auto p = try_pattern();
    if (!p) fail("expected pattern");
    return *p;
  }

  MethodSpec method() {
    MethodSpec m;
    if (accept("(")) {
      skip_ws();
      m.negated = accept("!");
      const std::size_t begin = pos_;
      while (glob_char(peek()) || peek() == '|') ++pos_;
      m.glob = std::string(text_.substr(begin, pos_ - begin));
      if (m.glob.empty()) fail("expected method name");
      expect(")");
      return m;
    }
    m.negated = accept("!");
    const std::size_t begin = pos_;
    while (glob_char(peek())) ++pos_;
    m.glob = std::string(text_.substr(begin, pos_ - begin));
    if (m.glob.empty()) fail("expected method name");
    return m;
  }

  // [receiver '.'] method
  void head(PropLabel& label) {
    skip_ws();
    if (peek() != '(') {
      const std::size_t save = pos_;
      auto recv = try_pattern();
      if (recv && peek() == '.' && peek(1) != '\0') {
        ++pos_;
        label.receiver = recv;
      } else {
        pos_ = save;
      }
    }
    label.method = method();
  }

  void call_expr(PropLabel& label) {
    head(label);
    skip_ws();
    if (accept("[")) {
      skip_ws();
      if (!accept("*")) fail("expected '*' in argument wildcard");
      expect("]");
      label.any_args = true;
      return;
    }
    if (!accept("(")) fail("expected '(' or '[*]'");
    skip_ws();
    if (accept(")")) return;
    while (true) {
      label.args.push_back(pattern());
      skip_ws();
      if (accept(")")) return;
      if (!accept(",")) fail("expected ',' or ')'");
    }
  }

  PropLabel label() {
    PropLabel label;
    skip_ws();
    const std::size_t start = pos_;
    std::string_view r = rest();
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back())))
      r.remove_suffix(1);
    if (r == "*") {
      pos_ = text_.size();
      label.kind = PropLabel::Kind::any;
      return label;
    }
    if (keyword("call")) {
      label.kind = PropLabel::Kind::call;
      call_expr(label);
    } else if (keyword("ret")) {
      label.kind = PropLabel::Kind::ret;
      label.result = pattern();
      expect(":=");
      head(label);
    } else {
      auto result = try_pattern();
      skip_ws();
      if (result && accept(":=")) {
        label.kind = PropLabel::Kind::call_ret;
        label.result = *result;
      } else {
        pos_ = start;
        label.kind = PropLabel::Kind::call;
      }
      call_expr(label);
    }
    skip_ws();
    if (!done()) fail("unexpected text after label");
    return label;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

}  // namespace

PropertyAst parse_property(std::string_view text) {
  PropertyAst ast;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = strip_comment(raw);
    Cursor c(line, line_no, 0);
    c.skip_ws();
    if (c.done()) continue;

    if (c.keyword("property")) {
      if (seen_header) c.fail("duplicate property header");
      c.skip_ws();
      ast.name = c.ident();
      seen_header = true;
      c.skip_ws();
      if (!c.done()) c.fail("unexpected text after property name");
      continue;
    }
    if (c.keyword("prefix")) {
      c.skip_ws();
      const bool angle = c.accept("<");
      const std::size_t begin = c.pos();
      while (!c.done() && c.peek() != '>' &&
             !std::isspace(static_cast<unsigned char>(c.peek())))
        c.reset(c.pos() + 1);
      std::string prefix(line.substr(begin, c.pos() - begin));
      if (prefix.empty()) c.fail("expected prefix");
      if (angle) c.expect(">");
      c.skip_ws();
      if (!c.done()) c.fail("unexpected text after prefix");
      ast.prefixes.push_back(std::move(prefix));
      continue;
    }

    PropTransition t;
    t.line = line_no;
    t.source = c.ident();
    c.expect("->");
    c.skip_ws();
    t.target = c.ident();
    c.expect(":");
    t.label = c.label();
    ast.transitions.push_back(std::move(t));
  }
  if (!seen_header) throw ParseError(1, 1, "missing 'property NAME' header");
  return ast;
}

std::string to_string(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::bind: {
      std::string s = p.text;
      if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
      return s;
    }
    case Pattern::Kind::read: return p.text;
    case Pattern::Kind::not_read: return "!" + p.text;
    case Pattern::Kind::literal: return "\"" + p.text + "\"";
    case Pattern::Kind::wildcard: return "*";
  }
  return "?";
}

std::string to_string(const PropLabel& label) {
  if (label.kind == PropLabel::Kind::any) return "*";
  std::string head;
  if (label.receiver) head = to_string(*label.receiver) + ".";
  head += label.method.negated ? "(!" + label.method.glob + ")"
                               : label.method.glob;
  if (label.kind == PropLabel::Kind::ret)
    return "ret " + to_string(label.result) + " := " + head;
  std::string args;
  if (label.any_args) {
    args = "[*]";
  } else {
    args = "(";
    for (std::size_t i = 0; i < label.args.size(); ++i) {
      if (i) args += ", ";
      args += to_string(label.args[i]);
    }
    args += ")";
  }
  if (label.kind == PropLabel::Kind::call) return "call " + head + args;
  return to_string(label.result) + " := " + head + args;
}

}  // namespace topl
