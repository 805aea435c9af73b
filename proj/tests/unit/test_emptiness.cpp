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

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "topl/hl_automaton.hpp"
#include "topl/translate.hpp"

using namespace topl;
using namespace topl::testing;

TEST_CASE("RA with an unreachable final state is empty") {
  ToplAutomaton a;
  a.arity = 1;
  a.registers = 1;
  a.initial_store = {atom("a")};
  a.add_state("p");
  a.add_state("f", true);
  a.add_transition(0, Label{eq(1, 1), Action::nop()}, 0);
  const auto r = ra_emptiness(as_register_automaton(a));
  CHECK(r.empty);
  CHECK_FALSE(r.witness);
}

TEST_CASE("RA emptiness needs fresh values to be distinct from the store") {
  ToplAutomaton a;
  a.arity = 1;
  a.registers = 2;
  a.initial_store = {atom("a"), atom("b")};
  a.add_state("p");
  a.add_state("q");
  a.add_state("f", true);
  a.add_transition(0, Label{fresh_guard(2), set(1, 1)}, 1);
  a.add_transition(1, Label{eq(2, 1), Action::nop()}, 2);
  const auto r = ra_emptiness(as_register_automaton(a));
  REQUIRE_FALSE(r.empty);
  REQUIRE(r.witness);
  CHECK(r.witness->size() == 2);
  CHECK((*r.witness)[1][0] == atom("b"));
  CHECK(accepts(a, *r.witness));
}

TEST_CASE("RA emptiness agrees with bounded search") {
  Rng rng(6);
  const auto u = universe3();
  for (int i = 0; i < 120; ++i) {
    const auto a = random_ra(rng, u);
    const auto r = ra_emptiness(as_register_automaton(a));
    REQUIRE(r.empty == !oracle::small_model_witness(a).has_value());
    if (!r.empty) {
      REQUIRE(r.witness);
      CHECK(oracle::topl_accepts(a, *r.witness));
    }
  }
}

TEST_CASE("TOPL and hl emptiness produce replayable witnesses") {
  const auto t1 = emptiness(example_topl1());
  REQUIRE_FALSE(t1.empty);
  CHECK(accepts(example_topl1(), *t1.witness));
  const auto lc = emptiness(list_cycle());
  REQUIRE_FALSE(lc.empty);
  CHECK(accepts(list_cycle(), *lc.witness));
  const auto ab = emptiness(ab_example());
  REQUIRE_FALSE(ab.empty);
  CHECK(hl_accepts(ab_example(), *ab.witness));
}

TEST_CASE("emptiness is consistent with bounded membership on random automata") {
  Rng rng(8);
  const auto u = universe3();
  GenParams small;
  small.max_depth = 2;
  small.max_registers = 1;
  small.max_arity = 1;
  for (int i = 0; i < 60; ++i) {
    const auto a = random_topl(rng, u);
    const auto r = emptiness(a);
    if (r.empty) {
      for (const auto& w : oracle::all_words(u, a.arity, 3))
        REQUIRE_FALSE(oracle::topl_accepts(a, w));
    } else {
      REQUIRE(r.witness);
      CHECK(r.witness->size() <= 64);
      CHECK(oracle::topl_accepts(a, *r.witness));
    }
    const auto h = random_hl(rng, u, small);
    const auto rh = emptiness(h);
    if (rh.empty) {
      for (const auto& w : oracle::all_words(u, h.arity, 3))
        REQUIRE_FALSE(oracle::hl_accepts(h, w));
    } else {
      REQUIRE(rh.witness);
      CHECK(oracle::hl_accepts(h, *rh.witness));
    }
  }
}

TEST_CASE("contradictory guards make a TOPL automaton empty") {
  ToplAutomaton a;
  a.arity = 1;
  a.registers = 1;
  a.initial_store = {atom("a")};
  a.add_state("p");
  a.add_state("f", true);
  a.add_transition(0, Label{eq(1, 1) && neq(1, 1), Action::nop()}, 1);
  CHECK(emptiness(a).empty);
}
