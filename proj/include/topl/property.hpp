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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topl/automaton.hpp"

namespace topl {

struct Pattern {
  enum class Kind { bind, read, not_read, literal, wildcard };
  Kind kind = Kind::wildcard;
  /// Lower-cased variable name, or the literal text.
  std::string text;

  bool is_variable() const {
    return kind == Kind::bind || kind == Kind::read || kind == Kind::not_read;
  }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct MethodSpec {
  std::string glob;
  bool negated = false;
  friend bool operator==(const MethodSpec&, const MethodSpec&) = default;
};

struct PropLabel {
  enum class Kind { any, call, ret, call_ret };
  Kind kind = Kind::any;
  MethodSpec method;
  std::optional<Pattern> receiver;
  bool any_args = false;
  std::vector<Pattern> args;
  /// Return-value pattern of ret and call_ret labels.
  Pattern result;

  friend bool operator==(const PropLabel&, const PropLabel&) = default;
};

struct PropTransition {
  std::string source;
  std::string target;
  PropLabel label;
  std::size_t line = 0;
};

struct PropertyAst {
  std::string name;
  std::vector<std::string> prefixes;
  std::vector<PropTransition> transitions;
};

PropertyAst parse_property(std::string_view text);

std::string to_string(const Pattern& p);
std::string to_string(const PropLabel& label);

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::size_t line = 0;
  std::string message;
};

std::vector<Diagnostic> check_well_formed(const PropertyAst& ast);

struct EventSchema {
  /// Number of value slots; letters have width n + 2.
  std::size_t n = 0;
  std::map<std::string, std::size_t> variables;
  /// Register index to preloaded literal.
  std::map<std::size_t, std::string> constants;

  std::size_t width() const { return n + 2; }
};

struct CompiledProperty {
  std::string name;
  HlAutomaton automaton;
  EventSchema schema;
};

/// Throws CompileError listing the first error diagnostic.
CompiledProperty compile_property(const PropertyAst& ast);

CompiledProperty compile_property(std::string_view text);

}  // namespace topl
