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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "topl/errors.hpp"
#include "topl/guard.hpp"
#include "topl/value.hpp"

using namespace topl;
using namespace topl::testing;

TEST_CASE("values compare by kind and text") {
  CHECK(Value::atom("a") == Value::atom("a"));
  CHECK(Value::atom("a") != Value::atom("b"));
  CHECK(Value::bottom() != Value::atom(""));
  CHECK(Value::event(EventKind::call, "m") != Value::event(EventKind::ret, "m"));
  CHECK(Value::event(EventKind::call, "m") != Value::atom("m"));
  CHECK(Value::bottom().is_bottom());
  CHECK(Value().is_bottom());
}

TEST_CASE("value hashing agrees with equality") {
  ValueHash h;
  CHECK(h(Value::atom("x")) == h(Value::atom("x")));
  StoreHash sh;
  CHECK(sh({atom("a"), Value::bottom()}) == sh({atom("a"), Value::bottom()}));
}

TEST_CASE("eq and neq compare a register with a letter position") {
  const Store s{atom("a"), atom("b")};
  const Letter l{atom("b"), atom("a")};
  CHECK(eval_guard(eq(1, 2), s, l));
  CHECK_FALSE(eval_guard(eq(1, 1), s, l));
  CHECK(eval_guard(neq(1, 1), s, l));
  CHECK(eval_guard(eq(1, 2) && eq(2, 1), s, l));
  CHECK_FALSE(eval_guard(eq(1, 2) && neq(2, 1), s, l));
  CHECK(eval_guard(Guard::always(), s, l));
}

TEST_CASE("bottom only equals bottom") {
  const Store s{Value::bottom()};
  CHECK(eval_guard(eq(1, 1), s, {Value::bottom()}));
  CHECK(eval_guard(neq(1, 1), s, {atom("a")}));
}

TEST_CASE("method atoms match event ids by kind and glob") {
  MethodAtom m{1, EventKind::call, MethodPattern{{"java.sql.*.executeQuery", "run"}}, false};
  const Store s;
  CHECK(eval_atom(m, s, {Value::event(EventKind::call, "java.sql.Statement.executeQuery")}));
  CHECK(eval_atom(m, s, {Value::event(EventKind::call, "run")}));
  CHECK_FALSE(eval_atom(m, s, {Value::event(EventKind::ret, "run")}));
  CHECK_FALSE(eval_atom(m, s, {atom("run")}));
  m.negated = true;
  CHECK_FALSE(eval_atom(m, s, {Value::event(EventKind::call, "run")}));
  CHECK(eval_atom(m, s, {Value::event(EventKind::call, "walk")}));
}

TEST_CASE("glob matching") {
  CHECK(glob_match("*", ""));
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("a*c", "abbbc"));
  CHECK(glob_match("a*c", "ac"));
  CHECK_FALSE(glob_match("a*c", "acb"));
  CHECK(glob_match("*.get*", "java.util.Map.getOrDefault"));
  CHECK_FALSE(glob_match("get", "getX"));
}

TEST_CASE("actions assign letter positions in order") {
  const Letter l{atom("x"), atom("y")};
  const Store s0{atom("a"), atom("b")};
  CHECK(apply_action(set(1, 2), l, s0) == Store{atom("y"), atom("b")});
  CHECK(apply_action(then(set(1, 1), set(1, 2)), l, s0) == Store{atom("y"), atom("b")});
  CHECK(apply_action(then(set(1, 1), set(2, 1)), l, s0) == Store{atom("x"), atom("x")});
  CHECK(apply_action(Action::nop(), l, s0) == s0);
}

TEST_CASE("effective sources report the last writer of each register") {
  const auto src = effective_sources(then(set(1, 1), then(set(2, 2), set(1, 3))), 3);
  REQUIRE(src.size() == 4);
  CHECK(src[1] == 3);
  CHECK(src[2] == 2);
  CHECK(src[3] == 0);
  CHECK_THROWS_AS(effective_sources(set(4, 1), 3), StructuralError);
}

TEST_CASE("negation flips every atom on random stores and letters") {
  Rng rng(11);
  const auto u = universe3();
  std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1), idx(1, 3);
  for (int i = 0; i < 500; ++i) {
    Store s{u[pick(rng)], u[pick(rng)], u[pick(rng)]};
    Letter l{u[pick(rng)], u[pick(rng)], u[pick(rng)]};
    const std::size_t r = idx(rng), p = idx(rng);
    for (const GuardAtom a : {GuardAtom{EqAtom{r, p}}, GuardAtom{NeqAtom{r, p}}}) {
      CHECK(eval_atom(negate(a), s, l) != eval_atom(a, s, l));
      CHECK(eval_atom(a, s, l) == oracle::guard_holds(Guard{{a}}, s, l));
    }
  }
}

TEST_CASE("guards and actions print") {
  CHECK(to_string(Guard::always()) == "true");
  CHECK_FALSE(to_string(eq(1, 2) && neq(2, 1)).empty());
  CHECK(to_string(Action::nop()) == "nop");
  CHECK(has_method_atoms(Guard{{MethodAtom{}}}));
  CHECK_FALSE(has_method_atoms(eq(1, 1)));
}
