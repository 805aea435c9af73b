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
#include "topl/closure.hpp"
#include "topl/errors.hpp"

using namespace topl;
using namespace topl::testing;

namespace {

std::pair<ToplAutomaton, ToplAutomaton> same_arity_pair(Rng& rng) {
  const auto u = universe3();
  GenParams p;
  p.max_states = 3;
  auto a = random_topl(rng, u, p);
  for (;;) {
    auto b = random_topl(rng, u, p);
    if (b.arity == a.arity) return {std::move(a), std::move(b)};
  }
}

bool concat_oracle(const ToplAutomaton& a, const ToplAutomaton& b, const Word& w) {
  for (std::size_t i = 0; i <= w.size(); ++i)
    if (oracle::topl_accepts(a, Word(w.begin(), w.begin() + i)) &&
        oracle::topl_accepts(b, Word(w.begin() + i, w.end())))
      return true;
  return false;
}

}  // namespace

TEST_CASE("shifting registers moves guards and actions") {
  const Label l{eq(1, 2) && neq(2, 1), then(set(1, 1), set(2, 2))};
  const Label s = shift_registers(l, 3);
  CHECK(s.guard == (eq(4, 2) && neq(5, 1)));
  CHECK(s.action == then(set(4, 1), set(5, 2)));
}

TEST_CASE("closures match their set-theoretic definitions") {
  Rng rng(9);
  const auto u = universe3();
  for (int i = 0; i < 40; ++i) {
    const auto [a, b] = same_arity_pair(rng);
    const auto un = union_of(a, b);
    const auto in = intersection_of(a, b);
    const auto cc = concat_of(a, b);
    CHECK(un.registers == a.registers + b.registers);
    CHECK(validate_automaton(un).empty());
    CHECK(validate_automaton(in).empty());
    CHECK(validate_automaton(cc).empty());
    const oracle::ToplRunner ra(a), rb(b), ru(un), ri(in), rc(cc);
    for (const auto& w : oracle::all_words(u, a.arity, a.arity == 1 ? 4 : 3)) {
      const bool x = ra.accepts(w), y = rb.accepts(w);
      REQUIRE(ru.accepts(w) == (x || y));
      REQUIRE(ri.accepts(w) == (x && y));
      REQUIRE(rc.accepts(w) == concat_oracle(a, b, w));
    }
  }
}

TEST_CASE("closures need equal arity") {
  auto a = example_topl1();
  auto b = list_cycle();
  CHECK_THROWS_AS(union_of(a, b), ArityError);
  CHECK_THROWS_AS(intersection_of(a, b), ArityError);
  CHECK_THROWS_AS(concat_of(a, b), ArityError);
}

TEST_CASE("concatenation with itself") {
  const auto a = example_topl1();
  const auto aa = concat_of(a, a);
  CHECK(accepts(aa, word({{"1"}, {"2"}, {"3"}, {"4"}, {"5"}, {"6"}})));
  CHECK_FALSE(accepts(aa, word({{"1"}, {"2"}, {"3"}})));
  CHECK_FALSE(accepts(aa, word({{"1"}, {"2"}, {"3"}, {"4"}, {"5"}, {"4"}})));
}
