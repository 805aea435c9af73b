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

#include "generators.hpp"

namespace topl::testing {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <typename L>
void skeleton(Rng& rng, const std::vector<Value>& universe,
              const GenParams& p, std::size_t arity, std::size_t m,
              Automaton<L>& a) {
  a.arity = arity;
  a.registers = m;
  const std::size_t n_states = pick(rng, 1, p.max_states);
  for (std::size_t q = 0; q < n_states; ++q)
    a.add_state("s" + std::to_string(q), pick(rng, 0, 2) == 0);
  a.initial = 0;
  for (std::size_t i = 0; i < m; ++i)
    a.initial_store.push_back(universe[pick(rng, 0, universe.size() - 1)]);
}

Label random_label(Rng& rng, const GenParams& p, std::size_t arity,
                   std::size_t m) {
  Label l;
  if (m == 0) return l;
  const std::size_t atoms = pick(rng, 0, p.max_atoms);
  for (std::size_t k = 0; k < atoms; ++k) {
    const std::size_t reg = pick(rng, 1, m), pos = pick(rng, 1, arity);
    if (pick(rng, 0, 1))
      l.guard.conjuncts.push_back(EqAtom{reg, pos});
    else
      l.guard.conjuncts.push_back(NeqAtom{reg, pos});
  }
  const std::size_t sets = pick(rng, 0, 2);
  for (std::size_t k = 0; k < sets; ++k)
    l.action.assignments.push_back(Assignment{pick(rng, 1, m), pick(rng, 1, arity)});
  return l;
}

}  // namespace

std::vector<Value> universe3() {
  return {Value::atom("a"), Value::atom("b"), Value::atom("c")};
}

ToplAutomaton random_topl(Rng& rng, const std::vector<Value>& universe,
                          const GenParams& p) {
  ToplAutomaton a;
  const std::size_t n = pick(rng, 1, p.max_arity);
  const std::size_t m = pick(rng, 0, p.max_registers);
  skeleton(rng, universe, p, n, m, a);
  const std::size_t count = pick(rng, 1, p.max_transitions);
  for (std::size_t t = 0; t < count; ++t)
    a.add_transition(pick(rng, 0, a.states.size() - 1),
                     random_label(rng, p, n, m),
                     pick(rng, 0, a.states.size() - 1));
  return a;
}

HlAutomaton random_hl(Rng& rng, const std::vector<Value>& universe,
                      const GenParams& p) {
  HlAutomaton a;
  const std::size_t n = pick(rng, 1, p.max_arity);
  const std::size_t m = pick(rng, 0, p.max_registers);
  skeleton(rng, universe, p, n, m, a);
  const std::size_t d = pick(rng, 1, p.max_depth);
  const std::size_t count = pick(rng, 1, p.max_transitions);
  for (std::size_t t = 0; t < count; ++t) {
    LabelSeq seq;
    const std::size_t len = t == 0 ? d : pick(rng, 1, d);
    for (std::size_t k = 0; k < len; ++k) seq.push_back(random_label(rng, p, n, m));
    a.add_transition(pick(rng, 0, a.states.size() - 1), std::move(seq),
                     pick(rng, 0, a.states.size() - 1));
  }
  return a;
}

ToplAutomaton random_ra(Rng& rng, const std::vector<Value>& universe,
                        const GenParams& p) {
  ToplAutomaton a;
  const std::size_t m = pick(rng, 1, p.max_registers);
  skeleton(rng, universe, p, 1, m, a);
  const std::size_t count = pick(rng, 0, p.max_transitions);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t reg = pick(rng, 1, m);
    Label l;
    if (pick(rng, 0, 1)) {
      l.guard.conjuncts.push_back(EqAtom{reg, 1});
    } else {
      for (std::size_t i = 1; i <= m; ++i)
        l.guard.conjuncts.push_back(NeqAtom{i, 1});
      l.action.assignments.push_back(Assignment{reg, 1});
    }
    a.add_transition(pick(rng, 0, a.states.size() - 1), std::move(l),
                     pick(rng, 0, a.states.size() - 1));
  }
  return a;
}

Word random_word(Rng& rng, const std::vector<Value>& universe,
                 std::size_t arity, std::size_t length) {
  Word w(length);
  for (auto& l : w)
    for (std::size_t k = 0; k < arity; ++k)
      l.push_back(universe[pick(rng, 0, universe.size() - 1)]);
  return w;
}

}  // namespace topl::testing
