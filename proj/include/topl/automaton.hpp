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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topl/guard.hpp"
#include "topl/value.hpp"

namespace topl {

using StateId = std::size_t;

template <typename L>
struct Transition {
  StateId from = 0;
  L label;
  StateId to = 0;
};

/// Shared shape of TOPL automata (single-label transitions) and hl-TOPL
/// automata (label-sequence transitions). States are indices into `states`,
/// which holds their printable names.
template <typename L>
struct Automaton {
  std::size_t arity = 1;
  std::size_t registers = 0;
  std::vector<std::string> states;
  StateId initial = 0;
  Store initial_store;
  std::vector<bool> final;
  std::vector<Transition<L>> transitions;

  StateId add_state(std::string name, bool is_final = false) {
    states.push_back(std::move(name));
    final.push_back(is_final);
    return states.size() - 1;
  }

  void add_transition(StateId from, L label, StateId to) {
    transitions.push_back(Transition<L>{from, std::move(label), to});
  }

  bool is_final(StateId q) const { return q < final.size() && final[q]; }

  std::optional<StateId> find_state(std::string_view name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == name) return i;
    return std::nullopt;
  }

  /// Transition indices grouped by source state, in declaration order.
  std::vector<std::vector<std::size_t>> outgoing() const {
    std::vector<std::vector<std::size_t>> out(states.size());
    for (std::size_t t = 0; t < transitions.size(); ++t)
      if (transitions[t].from < out.size()) out[transitions[t].from].push_back(t);
    return out;
  }
};

using LabelSeq = std::vector<Label>;
using ToplAutomaton = Automaton<Label>;
using HlAutomaton = Automaton<LabelSeq>;

struct Configuration {
  StateId state = 0;
  Store store;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Successor configurations of `c` on `letter`, deduplicated, in the order
/// of the transitions that produce them.
std::vector<Configuration> step(const ToplAutomaton& automaton,
                                const Configuration& c, const Letter& letter);

/// Word membership by breadth-first simulation of configuration sets.
bool accepts(const ToplAutomaton& automaton, std::span<const Letter> word);

/// Every violated structural invariant, or an empty list.
std::vector<std::string> validate_automaton(const ToplAutomaton& automaton);
std::vector<std::string> validate_automaton(const HlAutomaton& automaton);

/// Throws StructuralError carrying the first diagnostic, if any.
void require_valid(const ToplAutomaton& automaton);
void require_valid(const HlAutomaton& automaton);

/// Largest label length of an hl automaton (at least 1).
std::size_t max_label_length(const HlAutomaton& automaton);

/// The hl automaton with the same transitions, each as a length-1 label.
HlAutomaton as_hl(const ToplAutomaton& automaton);

}  // namespace topl
