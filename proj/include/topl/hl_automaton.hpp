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
#include <optional>
#include <span>
#include <vector>

#include "topl/automaton.hpp"

namespace topl {

/// The linear TOPL automaton with states 0..d reading `labels` in order,
/// starting from `store`; state d is the only final state.
ToplAutomaton build_seq_matcher(const Store& store,
                                std::span<const Label> labels,
                                std::size_t arity);

enum class MatchStatus { matched, guard_failed, length_mismatch };

struct PrefixMatch {
  MatchStatus status = MatchStatus::guard_failed;
  std::optional<Store> store;
};

/// The store with which the sequence matcher accepts `word`, if any. The
/// matcher is deterministic, so there is at most one such store.
std::optional<Store> match_prefix(const Store& store,
                                  std::span<const Label> labels,
                                  std::span<const Letter> word);

/// Same as match_prefix, reporting a length mismatch distinctly.
PrefixMatch match_prefix_checked(const Store& store,
                                 std::span<const Label> labels,
                                 std::span<const Letter> word);

struct HlConfiguration {
  Configuration config;
  Word pending;

  friend bool operator==(const HlConfiguration&,
                         const HlConfiguration&) = default;
};

bool is_final(const HlAutomaton& automaton, const HlConfiguration& y);

struct HlSuccessor {
  Word consumed;
  HlConfiguration next;
  /// Index of the hl transition taken; empty for a skip.
  std::optional<std::size_t> transition;
};

/// One edge of the hl configuration graph, relative to a pending word.
struct HlMove {
  std::optional<std::size_t> transition;
  std::size_t consumed = 0;
  Configuration next;
};

/// Standard moves of `c` over `pending`; if there are none and `pending` is
/// non-empty, the single skip move. `outgoing` is automaton.outgoing().
std::vector<HlMove> hl_moves(const HlAutomaton& automaton,
                             const std::vector<std::vector<std::size_t>>& outgoing,
                             const Configuration& c,
                             std::span<const Letter> pending);

std::vector<HlSuccessor> hl_successors(const HlAutomaton& automaton,
                                       const HlConfiguration& y);

/// A step of an accepting hl path: letters [begin, end) of the word were
/// consumed by `transition`, or skipped when it is empty.
struct HlStep {
  std::optional<std::size_t> transition;
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const HlStep&, const HlStep&) = default;
};

/// The first accepting path found by a position-layered breadth-first
/// search from `start` over `word`. Transitions are tried in declaration
/// order; a skip only exists where no transition applies.
std::optional<std::vector<HlStep>> find_accepting_path(
    const HlAutomaton& automaton,
    const std::vector<std::vector<std::size_t>>& outgoing,
    const Configuration& start, std::span<const Letter> word);

bool hl_accepts(const HlAutomaton& automaton, std::span<const Letter> word);

}  // namespace topl
