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

#include <string>

#include "topl/automaton.hpp"

namespace topl::testing {

Value atom(const std::string& s);
Letter letter(std::initializer_list<const char*> values);
Word word(std::initializer_list<std::initializer_list<const char*>> letters);

/// {abc : a != c and b != c}, two registers.
ToplAutomaton example_topl1();

/// Detects a cycle in a linked list starting at v0. Store (next, v0, v0).
ToplAutomaton list_cycle();

/// Words whose first A is not surrounded by two Bs. Store (A, B), d = 3.
HlAutomaton ab_example();

/// One transition guarded by eq 1 1 from the initial to the final state.
ToplAutomaton remark_automaton();

extern const char* const kTaintProperty;
extern const char* const kIteratorProperty;
extern const char* const kSanitizeProperty;
extern const char* const kOpenUseProperty;

}  // namespace topl::testing
