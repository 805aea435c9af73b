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

#include "topl/automaton.hpp"

namespace topl {

// Register banks are laid side by side: B's registers follow A's.

ToplAutomaton union_of(const ToplAutomaton& a, const ToplAutomaton& b);
ToplAutomaton intersection_of(const ToplAutomaton& a, const ToplAutomaton& b);
ToplAutomaton concat_of(const ToplAutomaton& a, const ToplAutomaton& b);

/// Renumbers every register index in the label by adding offset.
Label shift_registers(const Label& label, std::size_t offset);

}  // namespace topl
