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

#include "topl/closure.hpp"

#include <deque>
#include <map>

#include "topl/errors.hpp"

namespace topl {

Label shift_registers(const Label& label, std::size_t offset) {
  Label out = label;
  for (auto& atom : out.guard.conjuncts) {
    if (auto* e = std::get_if<EqAtom>(&atom)) e->reg += offset;
    if (auto* ne = std::get_if<NeqAtom>(&atom)) ne->reg += offset;
  }
  for (auto& a : out.action.assignments) a.reg += offset;
  return out;
}

namespace {

ToplAutomaton side_by_side(const ToplAutomaton& a, const ToplAutomaton& b) {
  require_valid(a);
  require_valid(b);
  if (a.arity != b.arity)
    throw ArityError("arity mismatch: " + std::to_string(a.arity) + " vs " +
                     std::to_string(b.arity));
  ToplAutomaton out;
  out.arity = a.arity;
  out.registers = a.registers + b.registers;
  out.initial_store = a.initial_store;
  out.initial_store.insert(out.initial_store.end(), b.initial_store.begin(),
                           b.initial_store.end());
  return out;
}

// Copies the states and transitions of x into out under a name prefix.
StateId copy_into(ToplAutomaton& out, const ToplAutomaton& x,
                  const std::string& prefix, std::size_t offset) {
  const StateId base = out.states.size();
  for (StateId q = 0; q < x.states.size(); ++q)
    out.add_state(prefix + x.states[q], x.is_final(q));
  for (const auto& t : x.transitions)
    out.add_transition(base + t.from, shift_registers(t.label, offset),
                       base + t.to);
  return base;
}

void copy_initial_moves(ToplAutomaton& out, StateId from,
                        const ToplAutomaton& x, StateId base,
                        std::size_t offset) {
  for (const auto& t : x.transitions)
    if (t.from == x.initial)
      out.add_transition(from, shift_registers(t.label, offset), base + t.to);
}

}  // namespace

ToplAutomaton union_of(const ToplAutomaton& a, const ToplAutomaton& b) {
  ToplAutomaton out = side_by_side(a, b);
  out.initial = out.add_state("init", a.is_final(a.initial) ||
                                          b.is_final(b.initial));
  const StateId base_a = copy_into(out, a, "A.", 0);
  const StateId base_b = copy_into(out, b, "B.", a.registers);
  copy_initial_moves(out, out.initial, a, base_a, 0);
  copy_initial_moves(out, out.initial, b, base_b, a.registers);
  return out;
}

ToplAutomaton intersection_of(const ToplAutomaton& a, const ToplAutomaton& b) {
  ToplAutomaton out = side_by_side(a, b);
  const auto out_a = a.outgoing();
  const auto out_b = b.outgoing();
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> work;
  auto id = [&](StateId p, StateId q) {
    auto [it, created] = ids.try_emplace({p, q}, 0);
    if (created) {
      it->second = out.add_state("(" + a.states[p] + "," + b.states[q] + ")",
                                 a.is_final(p) && b.is_final(q));
      work.push_back({p, q});
    }
    return it->second;
  };
  out.initial = id(a.initial, b.initial);
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    const StateId from = ids.at({p, q});
    for (std::size_t ta : out_a[p]) {
      for (std::size_t tb : out_b[q]) {
        const auto& la = a.transitions[ta].label;
        const Label lb = shift_registers(b.transitions[tb].label, a.registers);
        Label label{la.guard && lb.guard, then(la.action, lb.action)};
        out.add_transition(from, std::move(label),
                           id(a.transitions[ta].to, b.transitions[tb].to));
      }
    }
  }
  return out;
}

ToplAutomaton concat_of(const ToplAutomaton& a, const ToplAutomaton& b) {
  ToplAutomaton out = side_by_side(a, b);
  const StateId base_a = copy_into(out, a, "A.", 0);
  const StateId base_b = copy_into(out, b, "B.", a.registers);
  out.initial = base_a + a.initial;
  const bool b_eps = b.is_final(b.initial);
  for (StateId q = 0; q < a.states.size(); ++q) {
    if (!a.is_final(q)) continue;
    copy_initial_moves(out, base_a + q, b, base_b, a.registers);
    if (!b_eps) out.final[base_a + q] = false;
  }
  return out;
}

}  // namespace topl
