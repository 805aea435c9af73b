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

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "topl/errors.hpp"
#include "topl/translate.hpp"

namespace topl {

Word flatten(const Word& word) {
  Word out;
  for (const auto& letter : word)
    for (const auto& v : letter) out.push_back(Letter{v});
  return out;
}

Word unflatten(const Word& word, std::size_t arity) {
  if (arity == 0 || word.size() % arity != 0)
    throw ArityError("cannot unflatten a word of length " +
                     std::to_string(word.size()) + " into arity " +
                     std::to_string(arity));
  Word out;
  for (std::size_t i = 0; i < word.size(); i += arity) {
    Letter letter;
    for (std::size_t j = 0; j < arity; ++j) {
      if (word[i + j].size() != 1)
        throw ArityError("flat word letters must have arity 1");
      letter.push_back(word[i + j][0]);
    }
    out.push_back(std::move(letter));
  }
  return out;
}

Guard fresh_guard(std::size_t registers) {
  Guard g;
  for (std::size_t i = 1; i <= registers; ++i)
    g.conjuncts.push_back(NeqAtom{i, 1});
  return g;
}

bool is_register_label(const Label& label, std::size_t registers) {
  const auto& atoms = label.guard.conjuncts;
  if (label.action.is_nop()) {
    if (atoms.size() != 1) return false;
    const auto* e = std::get_if<EqAtom>(&atoms[0]);
    return e && e->pos == 1 && e->reg >= 1 && e->reg <= registers;
  }
  if (label.action.assignments.size() != 1) return false;
  const auto& a = label.action.assignments[0];
  if (a.pos != 1 || a.reg == 0 || a.reg > registers) return false;
  std::set<std::size_t> seen;
  for (const auto& atom : atoms) {
    const auto* ne = std::get_if<NeqAtom>(&atom);
    if (!ne || ne->pos != 1) return false;
    seen.insert(ne->reg);
  }
  return seen.size() == registers && atoms.size() == registers &&
         (registers == 0 || (*seen.begin() == 1 && *seen.rbegin() == registers));
}

std::vector<std::string> register_automaton_violations(
    const ToplAutomaton& automaton) {
  std::vector<std::string> out;
  if (automaton.arity != 1) out.push_back("register automata have arity 1");
  for (std::size_t t = 0; t < automaton.transitions.size(); ++t) {
    const auto& label = automaton.transitions[t].label;
    if (!is_register_label(label, automaton.registers))
      out.push_back("transition " + std::to_string(t) + ": label " +
                    to_string(label) +
                    " is not (fresh, set i) or (eq i, nop); use topl_to_ra");
  }
  return out;
}

RegisterAutomaton as_register_automaton(ToplAutomaton automaton) {
  require_valid(automaton);
  const auto problems = register_automaton_violations(automaton);
  if (!problems.empty()) throw StructuralError(problems.front());
  return RegisterAutomaton(std::move(automaton));
}

namespace {

using Repartition = std::vector<std::size_t>;

std::string join(const Repartition& r, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(r[i]);
  }
  return s;
}

struct GuardSets {
  // Per letter position (1-based): registers tested equal / different.
  std::vector<std::set<std::size_t>> eq, neq;
};

GuardSets split_guard(const Guard& g, std::size_t n) {
  GuardSets s{std::vector<std::set<std::size_t>>(n + 1),
              std::vector<std::set<std::size_t>>(n + 1)};
  for (const auto& atom : g.conjuncts) {
    if (const auto* e = std::get_if<EqAtom>(&atom))
      s.eq[e->pos].insert(e->reg);
    else if (const auto* ne = std::get_if<NeqAtom>(&atom))
      s.neq[ne->pos].insert(ne->reg);
    else
      throw StructuralError(
          "method guards cannot be translated to register automata");
  }
  return s;
}

class RaBuilder {
 public:
  explicit RaBuilder(const ToplAutomaton& a)
      : a_(a), m_(a.registers), n_(a.arity), big_(2 * a.registers + 1),
        out_(a_.outgoing()) {
    ra_.arity = 1;
    ra_.registers = big_;
  }

  ToplAutomaton build() {
    // Equal initial values share one concrete register.
    std::vector<Value> classes;
    Repartition r0(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      auto it = std::find(classes.begin(), classes.end(), a_.initial_store[i]);
      r0[i] = static_cast<std::size_t>(it - classes.begin()) + 1;
      if (it == classes.end()) classes.push_back(a_.initial_store[i]);
    }
    ra_.initial_store = classes;
    for (std::size_t k = 0; ra_.initial_store.size() < big_; ++k) {
      Value junk = Value::atom("#" + std::to_string(k));
      if (std::find(classes.begin(), classes.end(), junk) == classes.end())
        ra_.initial_store.push_back(junk);
    }
    ra_.initial = main_state(a_.initial, r0);
    while (!work_.empty()) {
      auto [q, r] = work_.front();
      work_.pop_front();
      const StateId from = main_.at({q, r});
      for (std::size_t t : out_[q]) expand(t, from, 1, r, r);
    }
    return std::move(ra_);
  }

 private:
  StateId main_state(StateId q, const Repartition& r) {
    auto [it, fresh] = main_.try_emplace({q, r}, 0);
    if (fresh) {
      it->second = ra_.add_state(a_.states[q] + "[" + join(r) + "]",
                                 a_.is_final(q));
      work_.push_back({q, r});
    }
    return it->second;
  }

  // Emits the transitions reading component j of transition t.
  void expand(std::size_t t, StateId from, std::size_t j, const Repartition& r0,
              const Repartition& rj) {
    const auto& tr = a_.transitions[t];
    const GuardSets gs = split_guard(tr.label.guard, n_);
    std::set<std::size_t> eqs, neqs;
    for (std::size_t i : gs.eq[j]) eqs.insert(r0[i - 1]);
    for (std::size_t i : gs.neq[j]) neqs.insert(r0[i - 1]);
    if (eqs.size() > 1) return;
    for (std::size_t e : eqs)
      if (neqs.count(e)) return;

    const auto src = effective_sources(tr.label.action, m_);
    std::vector<std::size_t> written;
    for (std::size_t i = 1; i <= m_; ++i)
      if (src[i] == j) written.push_back(i);

    auto emit = [&](Label label, std::size_t k) {
      Repartition next = rj;
      for (std::size_t i : written) next[i - 1] = k;
      if (j == n_) {
        ra_.add_transition(from, std::move(label), main_state(tr.to, next));
        return;
      }
      auto key = std::make_tuple(t, j, r0, next);
      auto [it, created] = inner_.try_emplace(key, 0);
      if (created)
        it->second = ra_.add_state(a_.states[tr.from] + ">" +
                                       a_.states[tr.to] + "#" +
                                       std::to_string(t) + "." +
                                       std::to_string(j) + "[" + join(r0) +
                                       "|" + join(next) + "]",
                                   false);
      ra_.add_transition(from, std::move(label), it->second);
      if (created) expand(t, it->second, j + 1, r0, next);
    };

    if (eqs.empty()) {
      // Fresh component: write it outside the registers still in use.
      std::set<std::size_t> busy(r0.begin(), r0.end());
      for (std::size_t i = 1; i <= m_; ++i)
        if (std::find(written.begin(), written.end(), i) == written.end())
          busy.insert(rj[i - 1]);
      std::size_t k = 1;
      while (busy.count(k)) ++k;
      emit(Label{fresh_guard(big_), set(k, 1)}, k);
    }
    for (std::size_t e = 1; e <= big_; ++e) {
      if (neqs.count(e)) continue;
      if (!eqs.empty() && !eqs.count(e)) continue;
      emit(Label{eq(e, 1), Action::nop()}, e);
    }
  }

  const ToplAutomaton& a_;
  std::size_t m_, n_, big_;
  std::vector<std::vector<std::size_t>> out_;
  ToplAutomaton ra_;
  std::map<std::pair<StateId, Repartition>, StateId> main_;
  std::map<std::tuple<std::size_t, std::size_t, Repartition, Repartition>,
           StateId>
      inner_;
  std::deque<std::pair<StateId, Repartition>> work_;
};

}  // namespace

RegisterAutomaton topl_to_ra(const ToplAutomaton& automaton) {
  require_valid(automaton);
  for (const auto& t : automaton.transitions)
    if (has_method_atoms(t.label.guard))
      throw StructuralError(
          "method guards cannot be translated to register automata");
  return as_register_automaton(RaBuilder(automaton).build());
}

}  // namespace topl
