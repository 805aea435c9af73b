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
#include <deque>
#include <stdexcept>
#include <vector>

#include "topl/errors.hpp"
#include "topl/hl_automaton.hpp"
#include "topl/translate.hpp"

namespace topl {

EmptinessResult ra_emptiness(const RegisterAutomaton& ra) {
  const ToplAutomaton& a = ra.automaton();
  const auto out = a.outgoing();
  std::vector<std::optional<std::size_t>> via(a.states.size());
  std::vector<bool> seen(a.states.size(), false);
  std::deque<StateId> queue{a.initial};
  seen[a.initial] = true;
  std::optional<StateId> hit;
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    if (a.is_final(q)) {
      hit = q;
      break;
    }
    for (std::size_t t : out[q]) {
      const StateId to = a.transitions[t].to;
      if (seen[to]) continue;
      seen[to] = true;
      via[to] = t;
      queue.push_back(to);
    }
  }
  if (!hit) return {};

  std::vector<std::size_t> path;
  for (StateId q = *hit; via[q]; q = a.transitions[*via[q]].from)
    path.push_back(*via[q]);
  std::reverse(path.begin(), path.end());

  Store store = a.initial_store;
  Word witness;
  std::size_t counter = 0;
  for (std::size_t t : path) {
    const Label& label = a.transitions[t].label;
    Value v;
    if (label.action.is_nop()) {
      v = store[std::get<EqAtom>(label.guard.conjuncts[0]).reg - 1];
    } else {
      do {
        v = Value::atom("w" + std::to_string(counter++));
      } while (std::find(store.begin(), store.end(), v) != store.end());
    }
    witness.push_back(Letter{v});
    store = apply_action(label.action, witness.back(), store);
  }
  if (!accepts(a, witness))
    throw std::logic_error("ra_emptiness: witness failed replay");
  return {false, witness};
}

EmptinessResult emptiness(const ToplAutomaton& automaton) {
  auto result = ra_emptiness(topl_to_ra(automaton));
  if (result.empty) return result;
  result.witness = unflatten(*result.witness, automaton.arity);
  if (!accepts(automaton, *result.witness))
    throw std::logic_error("emptiness: witness failed replay");
  return result;
}

EmptinessResult emptiness(const HlAutomaton& automaton) {
  auto result = ra_emptiness(topl_to_ra(hl_to_topl(automaton)));
  if (result.empty) return result;
  result.witness = unflatten(*result.witness, automaton.arity);
  if (!hl_accepts(automaton, *result.witness))
    throw std::logic_error("emptiness: witness failed replay");
  return result;
}

}  // namespace topl
