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
#include <string>
#include <vector>

#include "topl/automaton.hpp"

namespace topl {

/// Concatenates the components of every letter. Output letters have arity 1.
Word flatten(const Word& word);

/// Inverse of flatten. Throws ArityError if |word| is not a multiple of arity.
Word unflatten(const Word& word, std::size_t arity);

/// A TOPL automaton of arity 1 whose labels are all (fresh, set i) or
/// (eq i, nop).
class RegisterAutomaton {
 public:
  const ToplAutomaton& automaton() const { return automaton_; }

 private:
  explicit RegisterAutomaton(ToplAutomaton a) : automaton_(std::move(a)) {}
  ToplAutomaton automaton_;

  friend RegisterAutomaton as_register_automaton(ToplAutomaton automaton);
};

bool is_register_label(const Label& label, std::size_t registers);

std::vector<std::string> register_automaton_violations(
    const ToplAutomaton& automaton);

/// Throws StructuralError when a label falls outside the register labels.
RegisterAutomaton as_register_automaton(ToplAutomaton automaton);

/// The conjunction neq 1 1 and ... and neq m 1.
Guard fresh_guard(std::size_t registers);

RegisterAutomaton topl_to_ra(const ToplAutomaton& automaton);

HlAutomaton topl_to_hl(const ToplAutomaton& automaton);

ToplAutomaton hl_to_topl(const HlAutomaton& automaton);

struct EmptinessResult {
  bool empty = true;
  std::optional<Word> witness;
};

EmptinessResult ra_emptiness(const RegisterAutomaton& automaton);
EmptinessResult emptiness(const ToplAutomaton& automaton);
EmptinessResult emptiness(const HlAutomaton& automaton);

}  // namespace topl
