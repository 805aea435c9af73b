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
#include "topl/automaton.hpp"
#include "topl/errors.hpp"

using namespace topl;
using namespace topl::testing;

TEST_CASE("first example accepts exactly words whose third value is new") {
  const auto a = example_topl1();
  CHECK(accepts(a, word({{"1"}, {"2"}, {"3"}})));
  CHECK_FALSE(accepts(a, word({{"1"}, {"2"}, {"1"}})));
  CHECK_FALSE(accepts(a, word({{"1"}, {"2"}, {"2"}})));
  CHECK_FALSE(accepts(a, word({{"1"}, {"2"}})));
  CHECK_FALSE(accepts(a, Word{}));
}

TEST_CASE("list-cycle automaton") {
  const auto a = list_cycle();
  CHECK(accepts(a, word({{"next", "v0", "v0"}})));
  CHECK(accepts(a, word({{"next", "v0", "v1"}, {"next", "v1", "v0"}})));
  CHECK(accepts(a, word({{"next", "v0", "v1"}, {"next", "v1", "v2"}, {"next", "v2", "v0"}})));
  CHECK_FALSE(accepts(a, word({{"next", "v0", "v1"}, {"next", "v1", "v2"}})));
  CHECK_FALSE(accepts(a, word({{"prev", "v0", "v0"}})));
}

TEST_CASE("step returns every enabled successor") {
  const auto a = example_topl1();
  const Configuration c0{a.initial, a.initial_store};
  const auto next = step(a, c0, letter({"7"}));
  REQUIRE(next.size() == 1);
  CHECK(next[0].store[0] == atom("7"));
}

TEST_CASE("the empty word is accepted iff the initial state is final") {
  ToplAutomaton a;
  a.arity = 1;
  a.add_state("q", false);
  CHECK_FALSE(accepts(a, Word{}));
  a.final[0] = true;
  CHECK(accepts(a, Word{}));
}

TEST_CASE("acceptance agrees with the reference semantics on random automata") {
  Rng rng(1);
  const auto u = universe3();
  for (int i = 0; i < 60; ++i) {
    const auto a = random_topl(rng, u);
    for (const auto& w : oracle::all_words(u, a.arity, 3))
      REQUIRE(accepts(a, w) == oracle::topl_accepts(a, w));
  }
}

TEST_CASE("validation reports malformed automata") {
  auto a = example_topl1();
  CHECK(validate_automaton(a).empty());
  CHECK_NOTHROW(require_valid(a));

  auto bad_reg = a;
  bad_reg.transitions[0].label.guard = eq(3, 1);
  CHECK_FALSE(validate_automaton(bad_reg).empty());
  CHECK_THROWS_AS(require_valid(bad_reg), StructuralError);

  auto bad_pos = a;
  bad_pos.transitions[0].label.action = set(1, 2);
  CHECK_FALSE(validate_automaton(bad_pos).empty());

  auto bad_state = a;
  bad_state.transitions[0].to = 42;
  CHECK_FALSE(validate_automaton(bad_state).empty());

  auto bad_store = a;
  bad_store.initial_store.pop_back();
  CHECK_FALSE(validate_automaton(bad_store).empty());

  HlAutomaton h = as_hl(a);
  CHECK(validate_automaton(h).empty());
  h.transitions[0].label.clear();
  CHECK_THROWS_AS(require_valid(h), StructuralError);
}

TEST_CASE("as_hl wraps each label in a sequence of length one") {
  const auto a = list_cycle();
  const auto h = as_hl(a);
  CHECK(h.transitions.size() == a.transitions.size());
  CHECK(max_label_length(h) == 1);
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    CHECK(h.transitions[i].label == LabelSeq{a.transitions[i].label});
}

TEST_CASE("outgoing groups transitions by source in order") {
  const auto a = list_cycle();
  const auto out = a.outgoing();
  std::size_t total = 0;
  for (std::size_t q = 0; q < out.size(); ++q)
    for (std::size_t i = 0; i < out[q].size(); ++i) {
      CHECK(a.transitions[out[q][i]].from == q);
      if (i) CHECK(out[q][i - 1] < out[q][i]);
      ++total;
    }
  CHECK(total == a.transitions.size());
  CHECK(a.find_state("nope") == std::nullopt);
}
