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

#include "topl/hl_automaton.hpp"

#include <map>

namespace topl {

ToplAutomaton build_seq_matcher(const Store& store,
                                std::span<const Label> labels,
                                std::size_t arity) {
  ToplAutomaton t;
  t.arity = arity;
  t.registers = store.size();
  t.initial_store = store;
  for (std::size_t i = 0; i <= labels.size(); ++i)
    t.add_state(std::to_string(i), i == labels.size());
  t.initial = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    t.add_transition(i, labels[i], i + 1);
  return t;
}

PrefixMatch match_prefix_checked(const Store& store,
                                 std::span<const Label> labels,
                                 std::span<const Letter> word) {
  if (labels.size() != word.size())
    return {MatchStatus::length_mismatch, std::nullopt};
  Store s = store;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!eval_guard(labels[i].guard, s, word[i]))
      return {MatchStatus::guard_failed, std::nullopt};
    s = apply_action(labels[i].action, word[i], std::move(s));
  }
  return {MatchStatus::matched, std::move(s)};
}

std::optional<Store> match_prefix(const Store& store,
                                  std::span<const Label> labels,
                                  std::span<const Letter> word) {
  return match_prefix_checked(store, labels, word).store;
}

bool is_final(const HlAutomaton& automaton, const HlConfiguration& y) {
  return y.pending.empty() && automaton.is_final(y.config.state);
}

std::vector<HlMove> hl_moves(
    const HlAutomaton& automaton,
    const std::vector<std::vector<std::size_t>>& outgoing,
    const Configuration& c, std::span<const Letter> pending) {
  std::vector<HlMove> moves;
  for (std::size_t t : outgoing[c.state]) {
    const auto& tr = automaton.transitions[t];
    const std::size_t len = tr.label.size();
    if (len > pending.size()) continue;
    if (auto s = match_prefix(c.store, tr.label, pending.first(len)))
      moves.push_back(HlMove{t, len, Configuration{tr.to, std::move(*s)}});
  }
  if (moves.empty() && !pending.empty())
    moves.push_back(HlMove{std::nullopt, 1, c});
  return moves;
}

std::vector<HlSuccessor> hl_successors(const HlAutomaton& automaton,
                                       const HlConfiguration& y) {
  const auto out = automaton.outgoing();
  std::vector<HlSuccessor> result;
  for (auto& mv : hl_moves(automaton, out, y.config, y.pending)) {
    HlSuccessor s;
    s.consumed.assign(y.pending.begin(), y.pending.begin() + mv.consumed);
    s.next.config = std::move(mv.next);
    s.next.pending.assign(y.pending.begin() + mv.consumed, y.pending.end());
    s.transition = mv.transition;
    result.push_back(std::move(s));
  }
  return result;
}

std::optional<std::vector<HlStep>> find_accepting_path(
    const HlAutomaton& automaton,
    const std::vector<std::vector<std::size_t>>& outgoing,
    const Configuration& start, std::span<const Letter> word) {
  struct Node {
    Configuration config;
    std::size_t parent_layer;
    std::size_t parent_index;
    HlStep step;
  };
  const std::size_t n = word.size();
  std::vector<std::vector<Node>> layers(n + 1);
  std::vector<std::map<Configuration, std::size_t>> seen(n + 1);
  layers[0].push_back(Node{start, 0, 0, {}});
  seen[0].emplace(start, 0);

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < layers[p].size(); ++i) {
      const Configuration c = layers[p][i].config;
      for (auto& mv : hl_moves(automaton, outgoing, c, word.subspan(p))) {
        const std::size_t q = p + mv.consumed;
        if (seen[q].contains(mv.next)) continue;
        seen[q].emplace(mv.next, layers[q].size());
        layers[q].push_back(
            Node{std::move(mv.next), p, i, HlStep{mv.transition, p, q}});
      }
    }
  }

  for (std::size_t i = 0; i < layers[n].size(); ++i) {
    if (!automaton.is_final(layers[n][i].config.state)) continue;
    std::vector<HlStep> path;
    std::size_t layer = n, index = i;
    while (layer != 0) {
      const Node& node = layers[layer][index];
      path.push_back(node.step);
      layer = node.parent_layer;
      index = node.parent_index;
    }
    return std::vector<HlStep>(path.rbegin(), path.rend());
  }
  return std::nullopt;
}

bool hl_accepts(const HlAutomaton& automaton, std::span<const Letter> word) {
  return find_accepting_path(
             automaton, automaton.outgoing(),
             Configuration{automaton.initial, automaton.initial_store}, word)
      .has_value();
}

}  // namespace topl
