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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "topl/value.hpp"

namespace topl {

/// Glob over fully qualified method names. `*` matches any run of
/// characters; a glob without `*` matches by string equality. A pattern
/// matches when any of its alternatives does (prefix expansion produces
/// several alternatives).
struct MethodPattern {
  std::vector<std::string> alternatives;

  bool matches(std::string_view method) const;

  friend bool operator==(const MethodPattern&, const MethodPattern&) = default;
  friend auto operator<=>(const MethodPattern&, const MethodPattern&) = default;
};

bool glob_match(std::string_view glob, std::string_view text);

// Indices are 1-based: `reg` in 1..m, `pos` in 1..n.
struct EqAtom {
  std::size_t reg = 1;
  std::size_t pos = 1;
  friend bool operator==(const EqAtom&, const EqAtom&) = default;
  friend auto operator<=>(const EqAtom&, const EqAtom&) = default;
};

struct NeqAtom {
  std::size_t reg = 1;
  std::size_t pos = 1;
  friend bool operator==(const NeqAtom&, const NeqAtom&) = default;
  friend auto operator<=>(const NeqAtom&, const NeqAtom&) = default;
};

/// Holds iff letter position `pos` is the event id (kind, name) with `name`
/// matched by `pattern`. Negated atoms hold exactly when the plain one fails.
struct MethodAtom {
  std::size_t pos = 1;
  EventKind kind = EventKind::call;
  MethodPattern pattern;
  bool negated = false;
  friend bool operator==(const MethodAtom&, const MethodAtom&) = default;
  friend auto operator<=>(const MethodAtom&, const MethodAtom&) = default;
};

using GuardAtom = std::variant<EqAtom, NeqAtom, MethodAtom>;

/// A conjunction of atoms; the empty conjunction is `true`.
struct Guard {
  std::vector<GuardAtom> conjuncts;

  static Guard always() { return {}; }
  bool is_true() const { return conjuncts.empty(); }

  friend bool operator==(const Guard&, const Guard&) = default;
};

Guard eq(std::size_t reg, std::size_t pos);
Guard neq(std::size_t reg, std::size_t pos);
Guard operator&&(Guard lhs, const Guard& rhs);

/// The complementary atom: eq <-> neq, method <-> negated method.
GuardAtom negate(const GuardAtom& atom);

struct Assignment {
  std::size_t reg = 1;
  std::size_t pos = 1;
  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// Assignments apply left to right; the empty list is `nop`.
struct Action {
  std::vector<Assignment> assignments;

  static Action nop() { return {}; }
  bool is_nop() const { return assignments.empty(); }

  friend bool operator==(const Action&, const Action&) = default;
};

Action set(std::size_t reg, std::size_t pos);
/// Sequential composition `lhs; rhs`.
Action then(Action lhs, const Action& rhs);

struct Label {
  Guard guard;
  Action action;
  friend bool operator==(const Label&, const Label&) = default;
};

/// Throws StructuralError when an index falls outside the store or letter.
bool eval_guard(const Guard& guard, const Store& store, const Letter& letter);
bool eval_atom(const GuardAtom& atom, const Store& store, const Letter& letter);
Store apply_action(const Action& action, const Letter& letter, Store store);

/// For each register, the letter position it ends up holding after the
/// action (0 when untouched). Later assignments to one register win.
std::vector<std::size_t> effective_sources(const Action& action,
                                           std::size_t registers);

std::string to_string(const GuardAtom& atom);
std::string to_string(const Guard& guard);
std::string to_string(const Action& action);
std::string to_string(const Label& label);

bool has_method_atoms(const Guard& guard);

}  // namespace topl
