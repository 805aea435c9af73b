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

#include "fixtures.hpp"

namespace topl::testing {

Value atom(const std::string& s) { return Value::atom(s); }

Letter letter(std::initializer_list<const char*> values) {
  Letter l;
  for (const char* v : values) l.push_back(v ? Value::atom(v) : Value::bottom());
  return l;
}

Word word(std::initializer_list<std::initializer_list<const char*>> letters) {
  Word w;
  for (const auto& l : letters) w.push_back(letter(l));
  return w;
}

ToplAutomaton example_topl1() {
  ToplAutomaton a;
  a.arity = 1;
  a.registers = 2;
  a.initial_store = {atom("0"), atom("0")};
  const auto q1 = a.add_state("1");
  const auto q2 = a.add_state("2");
  const auto q3 = a.add_state("3");
  const auto q4 = a.add_state("4", true);
  a.initial = q1;
  a.add_transition(q1, Label{Guard::always(), set(1, 1)}, q2);
  a.add_transition(q2, Label{Guard::always(), set(2, 1)}, q3);
  a.add_transition(q3, Label{neq(1, 1) && neq(2, 1), Action::nop()}, q4);
  return a;
}

ToplAutomaton list_cycle() {
  ToplAutomaton a;
  a.arity = 3;
  a.registers = 3;
  a.initial_store = {atom("next"), atom("v0"), atom("v0")};
  const auto q0 = a.add_state("q0");
  const auto q1 = a.add_state("q1");
  const auto q2 = a.add_state("q2", true);
  a.initial = q0;
  const Guard step = eq(1, 1) && eq(3, 2);
  a.add_transition(q0, Label{step, then(set(2, 2), set(3, 3))}, q1);
  a.add_transition(q0, Label{step, set(3, 3)}, q0);
  a.add_transition(q1, Label{step, set(3, 3)}, q1);
  a.add_transition(q1, Label{step && eq(2, 3), Action::nop()}, q2);
  a.add_transition(q2, Label{Guard::always(), Action::nop()}, q2);
  a.add_transition(q0, Label{step && eq(3, 3), Action::nop()}, q2);
  return a;
}

HlAutomaton ab_example() {
  HlAutomaton a;
  a.arity = 1;
  a.registers = 2;
  a.initial_store = {atom("A"), atom("B")};
  const auto q1 = a.add_state("1");
  const auto q2 = a.add_state("2");
  const auto q3 = a.add_state("3", true);
  a.initial = q1;
  a.add_transition(q1,
                   LabelSeq{Label{eq(2, 1), Action::nop()},
                            Label{eq(1, 1), Action::nop()},
                            Label{eq(2, 1), Action::nop()}},
                   q2);
  a.add_transition(q1, LabelSeq{Label{eq(1, 1), Action::nop()}}, q3);
  return a;
}

ToplAutomaton remark_automaton() {
  ToplAutomaton a;
  a.arity = 1;
  a.registers = 1;
  a.initial_store = {atom("v")};
  const auto q0 = a.add_state("q0");
  const auto qf = a.add_state("qf", true);
  a.initial = q0;
  a.add_transition(q0, Label{eq(1, 1), Action::nop()}, qf);
  return a;
}

const char* const kTaintProperty = R"(property Taint
  prefix <javax.servlet.http.HttpServletRequest>
  prefix <java.lang.String>
  prefix <java.sql.Statement>
  start -> start:       *
  start -> tracking:    X := *.getParameter[*]
  tracking -> tracking: *
  tracking -> tracking: X := x.concat(*)
  tracking -> tracking: X := *.concat(x)
  tracking -> error:    *.executeQuery(x)
)";

const char* const kIteratorProperty = R"(property Iterators
  start -> start: *
  start -> one:   X := C.iterator()
  one -> one:     *
  one -> two:     Y := c.iterator()
  two -> xBad:    y.remove()
  two -> yBad:    x.remove()
  xBad -> error:  call x.*[*]
  yBad -> error:  call y.*[*]
)";

const char* const kSanitizeProperty = R"(property Sanitize
  start -> start: *
  start -> a:     X := input()
  a -> a:         (!sanitize)(*)
  a -> a:         X := make(x, *)
  a -> a:         X := make(*, x)
  a -> b:         sanitize(x)
  a -> error:     sink(x)
)";

// Needs two live bindings of x to see the violation below.
const char* const kOpenUseProperty = R"(property OpenUse
  start -> start: *
  start -> one:   call X.open()
  one -> one:     *
  one -> error:   call x.use()
)";

}  // namespace topl::testing
