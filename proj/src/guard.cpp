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

#include "topl/guard.hpp"

#include "topl/errors.hpp"

namespace topl {

bool glob_match(std::string_view glob, std::string_view text) {
  // Iterative wildcard match with single backtrack point.
  std::size_t g = 0, t = 0;
  std::size_t star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (g < glob.size() && glob[g] == '*') {
      star = g++;
      mark = t;
    } else if (g < glob.size() && glob[g] == text[t]) {
      ++g;
      ++t;
    } else if (star != std::string_view::npos) {
      g = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (g < glob.size() && glob[g] == '*') ++g;
  return g == glob.size();
}

bool MethodPattern::matches(std::string_view method) const {
  for (const auto& alt : alternatives)
    if (glob_match(alt, method)) return true;
  return false;
}

Guard eq(std::size_t reg, std::size_t pos) { return Guard{{EqAtom{reg, pos}}}; }

Guard neq(std::size_t reg, std::size_t pos) {
  return Guard{{NeqAtom{reg, pos}}};
}

Guard operator&&(Guard lhs, const Guard& rhs) {
  lhs.conjuncts.insert(lhs.conjuncts.end(), rhs.conjuncts.begin(),
                       rhs.conjuncts.end());
  return lhs;
}

GuardAtom negate(const GuardAtom& atom) {
  if (const auto* e = std::get_if<EqAtom>(&atom)) return NeqAtom{e->reg, e->pos};
  if (const auto* n = std::get_if<NeqAtom>(&atom)) return EqAtom{n->reg, n->pos};
  auto m = std::get<MethodAtom>(atom);
  m.negated = !m.negated;
  return m;
}

Action set(std::size_t reg, std::size_t pos) {
  return Action{{Assignment{reg, pos}}};
}

Action then(Action lhs, const Action& rhs) {
  lhs.assignments.insert(lhs.assignments.end(), rhs.assignments.begin(),
                         rhs.assignments.end());
  return lhs;
}

namespace {

void check_reg(std::size_t reg, const Store& store) {
  if (reg == 0 || reg > store.size())
    throw StructuralError("register index out of range: " +
                          std::to_string(reg) + " (registers: " +
                          std::to_string(store.size()) + ")");
}

void check_pos(std::size_t pos, const Letter& letter) {
  if (pos == 0 || pos > letter.size())
    throw StructuralError("letter index out of range: " + std::to_string(pos) +
                          " (arity: " + std::to_string(letter.size()) + ")");
}

}  // namespace

bool eval_atom(const GuardAtom& atom, const Store& store, const Letter& letter) {
  if (const auto* e = std::get_if<EqAtom>(&atom)) {
    check_reg(e->reg, store);
    check_pos(e->pos, letter);
    return store[e->reg - 1] == letter[e->pos - 1];
  }
  if (const auto* n = std::get_if<NeqAtom>(&atom)) {
    check_reg(n->reg, store);
    check_pos(n->pos, letter);
    return store[n->reg - 1] != letter[n->pos - 1];
  }
  const auto& m = std::get<MethodAtom>(atom);
  check_pos(m.pos, letter);
  const Value& v = letter[m.pos - 1];
  const bool hit =
      v.is_event() && v.event_kind() == m.kind && m.pattern.matches(v.text());
  return hit != m.negated;
}

bool eval_guard(const Guard& guard, const Store& store, const Letter& letter) {
  for (const auto& atom : guard.conjuncts)
    if (!eval_atom(atom, store, letter)) return false;
  return true;
}

Store apply_action(const Action& action, const Letter& letter, Store store) {
  for (const auto& a : action.assignments) {
    check_reg(a.reg, store);
    check_pos(a.pos, letter);
    store[a.reg - 1] = letter[a.pos - 1];
  }
  return store;
}

std::vector<std::size_t> effective_sources(const Action& action,
                                           std::size_t registers) {
  std::vector<std::size_t> source(registers + 1, 0);
  for (const auto& a : action.assignments) {
    if (a.reg == 0 || a.reg > registers)
      throw StructuralError("register index out of range: " +
                            std::to_string(a.reg));
    source[a.reg] = a.pos;
  }
  return source;
}

std::string to_string(const GuardAtom& atom) {
  if (const auto* e = std::get_if<EqAtom>(&atom))
    return "eq " + std::to_string(e->reg) + " " + std::to_string(e->pos);
  if (const auto* n = std::get_if<NeqAtom>(&atom))
    return "neq " + std::to_string(n->reg) + " " + std::to_string(n->pos);
  const auto& m = std::get<MethodAtom>(atom);
  std::string alts;
  for (const auto& a : m.pattern.alternatives) {
    if (!alts.empty()) alts += "|";
    alts += a;
  }
  return std::string(m.negated ? "not " : "") + "method " +
         std::to_string(m.pos) + " " + std::string(to_string(m.kind)) + " " +
         alts;
}

std::string to_string(const Guard& guard) {
  if (guard.is_true()) return "true";
  std::string out;
  for (const auto& atom : guard.conjuncts) {
    if (!out.empty()) out += " and ";
    out += to_string(atom);
  }
  return out;
}

std::string to_string(const Action& action) {
  if (action.is_nop()) return "nop";
  std::string out;
  for (const auto& a : action.assignments) {
    if (!out.empty()) out += "; ";
    out += "set " + std::to_string(a.reg) + ":=" + std::to_string(a.pos);
  }
  return out;
}

std::string to_string(const Label& label) {
  return "(" + to_string(label.guard) + ", " + to_string(label.action) + ")";
}

bool has_method_atoms(const Guard& guard) {
  for (const auto& atom : guard.conjuncts)
    if (std::holds_alternative<MethodAtom>(atom)) return true;
  return false;
}

}  // namespace topl
