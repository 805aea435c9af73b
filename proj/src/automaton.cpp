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

#include "topl/automaton.hpp"

#include <algorithm>
#include <set>

#include "topl/errors.hpp"

namespace topl {

std::vector<Configuration> step(const ToplAutomaton& automaton,
                                const Configuration& c, const Letter& letter) {
  std::vector<Configuration> out;
  for (const auto& t : automaton.transitions) {
    if (t.from != c.state) continue;
    if (!eval_guard(t.label.guard, c.store, letter)) continue;
    Configuration next{t.to, apply_action(t.label.action, letter, c.store)};
    if (std::find(out.begin(), out.end(), next) == out.end())
      out.push_back(std::move(next));
  }
  return out;
}

bool accepts(const ToplAutomaton& automaton, std::span<const Letter> word) {
  const auto out = automaton.outgoing();
  std::set<Configuration> current{
      Configuration{automaton.initial, automaton.initial_store}};
  for (const auto& letter : word) {
    std::set<Configuration> next;
    for (const auto& c : current) {
      for (std::size_t t : out[c.state]) {
        const auto& tr = automaton.transitions[t];
        if (!eval_guard(tr.label.guard, c.store, letter)) continue;
        next.insert(Configuration{
            tr.to, apply_action(tr.label.action, letter, c.store)});
      }
    }
    if (next.empty()) return false;
    current = std::move(next);
  }
  return std::any_of(current.begin(), current.end(), [&](const auto& c) {
    return automaton.is_final(c.state);
  });
}

namespace {

void check_label(const Label& label, std::size_t m, std::size_t n,
                 const std::string& where, std::vector<std::string>& out) {
  auto reg = [&](std::size_t r) {
    if (r == 0 || r > m)
      out.push_back(where + ": register index out of range (" +
                    std::to_string(r) + ")");
  };
  auto pos = [&](std::size_t p) {
    if (p == 0 || p > n)
      out.push_back(where + ": letter index out of range (" +
                    std::to_string(p) + ")");
  };
  for (const auto& atom : label.guard.conjuncts) {
    if (const auto* e = std::get_if<EqAtom>(&atom)) {
      reg(e->reg);
      pos(e->pos);
    } else if (const auto* ne = std::get_if<NeqAtom>(&atom)) {
      reg(ne->reg);
      pos(ne->pos);
    } else {
      pos(std::get<MethodAtom>(atom).pos);
    }
  }
  for (const auto& a : label.action.assignments) {
    reg(a.reg);
    pos(a.pos);
  }
}

template <typename L, typename F>
std::vector<std::string> validate_common(const Automaton<L>& a,
                                         F&& check_transition_label) {
  std::vector<std::string> out;
  if (a.arity == 0) out.push_back("arity must be at least 1");
  if (a.states.empty()) out.push_back("automaton has no states");
  if (a.final.size() != a.states.size())
    out.push_back("final-state flags do not match the state list");
  if (a.initial >= a.states.size()) out.push_back("initial state unknown");
  if (a.initial_store.size() != a.registers)
    out.push_back("initial store has length " +
                  std::to_string(a.initial_store.size()) + ", expected " +
                  std::to_string(a.registers));
  std::set<std::string> names;
  for (const auto& s : a.states)
    if (!names.insert(s).second) out.push_back("duplicate state name " + s);
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    const auto& t = a.transitions[i];
    const std::string where = "transition " + std::to_string(i);
    if (t.from >= a.states.size() || t.to >= a.states.size())
      out.push_back(where + ": endpoint state unknown");
    check_transition_label(t.label, where, out);
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_automaton(const ToplAutomaton& a) {
  return validate_common(a, [&](const Label& l, const std::string& where,
                                std::vector<std::string>& out) {
    check_label(l, a.registers, a.arity, where, out);
  });
}

std::vector<std::string> validate_automaton(const HlAutomaton& a) {
  return validate_common(a, [&](const LabelSeq& seq, const std::string& where,
                                std::vector<std::string>& out) {
    if (seq.empty()) out.push_back(where + ": hl transition label is empty");
    for (const auto& l : seq) check_label(l, a.registers, a.arity, where, out);
  });
}

void require_valid(const ToplAutomaton& a) {
  const auto diags = validate_automaton(a);
  if (!diags.empty()) throw StructuralError(diags.front());
}

void require_valid(const HlAutomaton& a) {
  const auto diags = validate_automaton(a);
  if (!diags.empty()) throw StructuralError(diags.front());
}

std::size_t max_label_length(const HlAutomaton& a) {
  std::size_t d = 1;
  for (const auto& t : a.transitions) d = std::max(d, t.label.size());
  return d;
}

HlAutomaton as_hl(const ToplAutomaton& a) {
  HlAutomaton out;
  out.arity = a.arity;
  out.registers = a.registers;
  out.states = a.states;
  out.initial = a.initial;
  out.initial_store = a.initial_store;
  out.final = a.final;
  for (const auto& t : a.transitions)
    out.add_transition(t.from, LabelSeq{t.label}, t.to);
  return out;
}

}  // namespace topl
