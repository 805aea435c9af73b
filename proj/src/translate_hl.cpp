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
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "topl/errors.hpp"
#include "topl/translate.hpp"

namespace topl {

namespace {

bool contradictory(const std::vector<GuardAtom>& atoms) {
  for (const auto& a : atoms)
    if (std::find(atoms.begin(), atoms.end(), negate(a)) != atoms.end())
      return true;
  return false;
}

std::string unique_name(const HlAutomaton& a, std::string base) {
  while (a.find_state(base)) base += "'";
  return base;
}

}  // namespace

HlAutomaton topl_to_hl(const ToplAutomaton& automaton) {
  require_valid(automaton);
  HlAutomaton out;
  out.arity = automaton.arity;
  out.registers = automaton.registers;
  out.states = automaton.states;
  out.final = automaton.final;
  out.initial = automaton.initial;
  out.initial_store = automaton.initial_store;
  const StateId stuck = out.add_state(unique_name(out, "stuck"), false);

  for (const auto& t : automaton.transitions)
    out.add_transition(t.from, LabelSeq{t.label}, t.to);

  const auto outgoing = automaton.outgoing();
  for (StateId q = 0; q < automaton.states.size(); ++q) {
    std::vector<const Guard*> guards;
    bool total = false;
    for (std::size_t t : outgoing[q]) {
      const Guard& g = automaton.transitions[t].label.guard;
      if (g.is_true()) total = true;
      guards.push_back(&g);
    }
    if (total) continue;

    // not(g1) and ... and not(gd) in disjunctive normal form.
    std::set<std::vector<GuardAtom>> terms{{}};
    for (const Guard* g : guards) {
      std::set<std::vector<GuardAtom>> next;
      for (const auto& term : terms) {
        for (const auto& atom : g->conjuncts) {
          auto extended = term;
          const GuardAtom neg = negate(atom);
          if (std::find(extended.begin(), extended.end(), neg) ==
              extended.end())
            extended.push_back(neg);
          std::sort(extended.begin(), extended.end());
          if (!contradictory(extended)) next.insert(std::move(extended));
        }
      }
      terms = std::move(next);
    }
    for (const auto& term : terms)
      out.add_transition(q, LabelSeq{Label{Guard{term}, Action::nop()}}, stuck);
  }
  return out;
}

namespace {

// Register maps hold 0 for an undefined slot, 1..P for a concrete register,
// and P+c for component c of the letter being read.
using Slots = std::vector<std::size_t>;
using Pair = std::pair<std::size_t, std::size_t>;

Pair ordered(std::size_t a, std::size_t b) {
  return a < b ? Pair{a, b} : Pair{b, a};
}

struct SimState {
  StateId q = 0;
  std::size_t h = 0;
  std::size_t k = 0;
  Slots r;
  std::set<Pair> unknown;

  friend auto operator<=>(const SimState&, const SimState&) = default;
};

struct Constraint {
  std::size_t pos = 1;
  std::size_t reg = 1;
  bool equal = true;
};

struct Outcome {
  StateId q = 0;
  Slots hl;
  std::size_t consumed = 0;
  std::vector<Constraint> constraints;
};

struct Knowledge {
  std::vector<std::size_t> rep;
  std::set<Pair> unknown;

  std::size_t find(std::size_t p) const { return rep[p]; }
  bool maybe_equal(std::size_t a, std::size_t b) const {
    return a == b || unknown.count(ordered(a, b)) > 0;
  }
};

class ToplBuilder {
 public:
  explicit ToplBuilder(const HlAutomaton& a)
      : a_(a), m_(a.registers), n_(a.arity),
        d_(std::max<std::size_t>(1, max_label_length(a))),
        p_(m_ + (d_ - 1) * n_), v_(m_ + d_ * n_), out_(a.outgoing()) {
    res_.arity = n_;
    res_.registers = p_;
  }

  ToplAutomaton build() {
    SimState s0;
    s0.r.assign(v_, 0);
    std::vector<Value> classes;
    for (std::size_t i = 0; i < m_; ++i) {
      auto it = std::find(classes.begin(), classes.end(), a_.initial_store[i]);
      s0.r[i] = static_cast<std::size_t>(it - classes.begin()) + 1;
      if (it == classes.end()) classes.push_back(a_.initial_store[i]);
    }
    res_.initial_store = classes;
    res_.initial_store.resize(p_, Value::bottom());
    res_.initial = state_id(s0);
    while (!work_.empty()) {
      SimState s = work_.front();
      work_.pop_front();
      for (const auto& o : outcomes(s)) realize(s, o);
    }
    return std::move(res_);
  }

 private:
  std::size_t qslot(const SimState& s, std::size_t x, std::size_t c) const {
    return m_ + ((s.k + x) % d_) * n_ + (c - 1);
  }

  Slots hl_of(const SimState& s) const {
    return Slots(s.r.begin(), s.r.begin() + static_cast<std::ptrdiff_t>(m_));
  }

  std::string name(const SimState& s) const {
    std::string out = a_.states[s.q] + "(" + std::to_string(s.h) + "," +
                      std::to_string(s.k) + ",[";
    for (std::size_t i = 0; i < s.r.size(); ++i) {
      if (i) out += ",";
      out += s.r[i] ? std::to_string(s.r[i]) : "-";
    }
    out += "]";
    if (!s.unknown.empty()) {
      out += ",{";
      bool first = true;
      for (const auto& [x, y] : s.unknown) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(x) + "~" + std::to_string(y);
      }
      out += "}";
    }
    return out + ")";
  }

  StateId state_id(const SimState& s) {
    auto [it, created] = ids_.try_emplace(s, 0);
    if (created) {
      it->second = res_.add_state(name(s), static_final(s));
      work_.push_back(s);
    }
    return it->second;
  }

  // Evaluates one label against the saved letter at queue position x.
  bool static_label(const SimState& s, const Label& label, Slots& hl,
                    std::size_t x) const {
    for (const auto& atom : label.guard.conjuncts) {
      std::size_t reg, pos;
      bool want_equal;
      if (const auto* e = std::get_if<EqAtom>(&atom)) {
        reg = e->reg, pos = e->pos, want_equal = true;
      } else {
        const auto& ne = std::get<NeqAtom>(atom);
        reg = ne.reg, pos = ne.pos, want_equal = false;
      }
      const std::size_t a = hl[reg - 1];
      const std::size_t b = s.r[qslot(s, x, pos)];
      if (a != b && s.unknown.count(ordered(a, b)))
        throw std::logic_error("hl_to_topl: undetermined static comparison");
      if ((a == b) != want_equal) return false;
    }
    for (const auto& asg : label.action.assignments)
      hl[asg.reg - 1] = s.r[qslot(s, x, asg.pos)];
    return true;
  }

  std::optional<Slots> static_run(const SimState& s, const LabelSeq& labels,
                                  std::size_t count, std::size_t x0,
                                  Slots hl) const {
    for (std::size_t i = 0; i < count; ++i)
      if (!static_label(s, labels[i], hl, x0 + i)) return std::nullopt;
    return hl;
  }

  bool static_final(const SimState& s) const {
    using Node = std::tuple<StateId, Slots, std::size_t>;
    std::set<Node> seen;
    std::deque<Node> queue;
    auto push = [&](Node n) {
      if (seen.insert(n).second) queue.push_back(std::move(n));
    };
    push({s.q, hl_of(s), 0});
    while (!queue.empty()) {
      auto [q, hl, x] = queue.front();
      queue.pop_front();
      if (x == s.h && a_.is_final(q)) return true;
      bool moved = false;
      for (std::size_t t : out_[q]) {
        const auto& tr = a_.transitions[t];
        const std::size_t len = tr.label.size();
        if (len > s.h - x) continue;
        if (auto next = static_run(s, tr.label, len, x, hl)) {
          moved = true;
          push({tr.to, std::move(*next), x + len});
        }
      }
      if (!moved && x < s.h) push({q, hl, x + 1});
    }
    return false;
  }

  std::vector<Outcome> outcomes(const SimState& s) const {
    const Slots hl0 = hl_of(s);
    if (s.h + 1 < d_) return {Outcome{s.q, hl0, 0, {}}};

    std::vector<Outcome> result;
    bool short_move = false;
    std::vector<std::vector<Constraint>> long_guards;
    for (std::size_t t : out_[s.q]) {
      const auto& tr = a_.transitions[t];
      const std::size_t len = tr.label.size();
      if (len < d_) {
        if (auto hl = static_run(s, tr.label, len, 0, hl0)) {
          short_move = true;
          result.push_back(Outcome{tr.to, std::move(*hl), len, {}});
        }
        continue;
      }
      auto hl = static_run(s, tr.label, d_ - 1, 0, hl0);
      if (!hl) continue;
      const Label& last = tr.label[d_ - 1];
      std::vector<Constraint> cs;
      for (const auto& atom : last.guard.conjuncts) {
        if (const auto* e = std::get_if<EqAtom>(&atom))
          cs.push_back({e->pos, (*hl)[e->reg - 1], true});
        else {
          const auto& ne = std::get<NeqAtom>(atom);
          cs.push_back({ne.pos, (*hl)[ne.reg - 1], false});
        }
      }
      Slots after = *hl;
      for (const auto& asg : last.action.assignments)
        after[asg.reg - 1] = p_ + asg.pos;
      result.push_back(Outcome{tr.to, std::move(after), d_, cs});
      long_guards.push_back(std::move(cs));
    }
    if (short_move) return result;

    // Skip: no maximal transition may be enabled on the current letter.
    std::vector<std::vector<Constraint>> terms{{}};
    for (const auto& g : long_guards) {
      std::vector<std::vector<Constraint>> next;
      for (const auto& term : terms)
        for (const auto& c : g) {
          auto extended = term;
          extended.push_back({c.pos, c.reg, !c.equal});
          next.push_back(std::move(extended));
        }
      terms = std::move(next);
    }
    for (auto& term : terms)
      result.push_back(Outcome{s.q, hl0, 1, std::move(term)});
    return result;
  }

  struct Pending {
    const SimState* s;
    Slots post;
    std::vector<bool> needed;
    std::vector<std::set<std::size_t>> geq, gneq;
    std::vector<std::size_t> live;
    StateId q;
    std::size_t h, k;
  };

  void realize(const SimState& s, const Outcome& o) {
    Pending p;
    p.s = &s;
    p.q = o.q;
    p.post.assign(v_, 0);
    for (std::size_t i = 0; i < m_; ++i) p.post[i] = o.hl[i];
    for (std::size_t x = o.consumed; x < s.h; ++x)
      for (std::size_t c = 1; c <= n_; ++c)
        p.post[qslot(s, x, c)] = s.r[qslot(s, x, c)];
    if (o.consumed <= s.h)
      for (std::size_t c = 1; c <= n_; ++c)
        p.post[qslot(s, s.h, c)] = p_ + c;
    p.h = s.h + 1 - o.consumed;
    p.k = (s.k + o.consumed) % d_;

    p.needed.assign(n_ + 1, false);
    for (std::size_t v : p.post)
      if (v > p_) p.needed[v - p_] = true;
    p.geq.assign(n_ + 1, {});
    p.gneq.assign(n_ + 1, {});
    for (const auto& c : o.constraints)
      (c.equal ? p.geq : p.gneq)[c.pos].insert(c.reg);

    Knowledge know;
    know.rep.resize(p_ + 1);
    for (std::size_t i = 0; i <= p_; ++i) know.rep[i] = i;
    know.unknown = s.unknown;

    // Components that are not stored only carry the transition's own tests.
    std::vector<GuardAtom> atoms;
    for (std::size_t c = 1; c <= n_; ++c) {
      if (p.needed[c]) continue;
      for (std::size_t a : p.geq[c]) {
        if (p.gneq[c].count(a)) return;
        for (std::size_t b : p.geq[c])
          if (!know.maybe_equal(a, b)) return;
        atoms.push_back(EqAtom{a, c});
      }
      for (std::size_t b : p.gneq[c]) atoms.push_back(NeqAtom{b, c});
    }

    std::set<std::size_t> live;
    for (std::size_t v : s.r)
      if (v) live.insert(v);
    p.live.assign(live.begin(), live.end());
    std::vector<std::size_t> phys(n_ + 1, 0);
    type_component(p, 1, know, atoms, phys);
  }

  // Enumerates sets of live registers pairwise possibly equal.
  void cliques(const std::vector<std::size_t>& regs, const Knowledge& know,
               std::size_t from, std::vector<std::size_t>& current,
               std::vector<std::vector<std::size_t>>& out) const {
    for (std::size_t i = from; i < regs.size(); ++i) {
      bool ok = true;
      for (std::size_t c : current)
        if (!know.maybe_equal(c, regs[i])) ok = false;
      if (!ok) continue;
      current.push_back(regs[i]);
      out.push_back(current);
      cliques(regs, know, i + 1, current, out);
      current.pop_back();
    }
  }

  void type_component(const Pending& p, std::size_t c, const Knowledge& know,
                      const std::vector<GuardAtom>& atoms,
                      std::vector<std::size_t>& phys) {
    if (c > n_) {
      finish(p, know, atoms, phys);
      return;
    }
    if (!p.needed[c]) {
      type_component(p, c + 1, know, atoms, phys);
      return;
    }
    std::set<std::size_t> reps;
    for (std::size_t r : p.live) reps.insert(know.find(r));
    const std::vector<std::size_t> regs(reps.begin(), reps.end());
    std::set<std::size_t> geq, gneq;
    for (std::size_t r : p.geq[c]) geq.insert(know.find(r));
    for (std::size_t r : p.gneq[c]) gneq.insert(know.find(r));

    std::vector<std::vector<std::size_t>> options{{}};
    std::vector<std::size_t> scratch;
    cliques(regs, know, 0, scratch, options);
    for (const auto& e : options) {
      if (!std::includes(e.begin(), e.end(), geq.begin(), geq.end())) continue;
      if (std::any_of(e.begin(), e.end(),
                      [&](std::size_t r) { return gneq.count(r) > 0; }))
        continue;
      std::vector<GuardAtom> next_atoms = atoms;
      Knowledge next = know;
      if (e.empty()) {
        for (std::size_t r : regs) next_atoms.push_back(NeqAtom{r, c});
        phys[c] = 0;
      } else {
        for (std::size_t r : e) next_atoms.push_back(EqAtom{r, c});
        for (std::size_t r : regs) {
          if (std::binary_search(e.begin(), e.end(), r)) continue;
          if (std::any_of(e.begin(), e.end(), [&](std::size_t x) {
                return know.unknown.count(ordered(r, x)) > 0;
              }))
            next_atoms.push_back(NeqAtom{r, c});
        }
        const std::size_t root = e.front();
        for (auto& r : next.rep)
          if (std::binary_search(e.begin(), e.end(), r)) r = root;
        for (auto it = next.unknown.begin(); it != next.unknown.end();) {
          if (std::binary_search(e.begin(), e.end(), it->first) ||
              std::binary_search(e.begin(), e.end(), it->second))
            it = next.unknown.erase(it);
          else
            ++it;
        }
        phys[c] = root;
      }
      type_component(p, c + 1, next, next_atoms, phys);
    }
  }

  void finish(const Pending& p, const Knowledge& know,
              const std::vector<GuardAtom>& atoms,
              const std::vector<std::size_t>& phys) {
    SimState t;
    t.q = p.q;
    t.h = p.h;
    t.k = p.k;
    t.r = p.post;
    std::set<std::size_t> image;
    for (auto& v : t.r) {
      if (v == 0) continue;
      if (v <= p_)
        v = know.find(v);
      else if (phys[v - p_])
        v = phys[v - p_];
      if (v <= p_) image.insert(v);
    }
    Action action;
    std::vector<std::size_t> allocated;
    std::vector<std::size_t> target(n_ + 1, 0);
    for (std::size_t c = 1; c <= n_; ++c) {
      if (!p.needed[c] || phys[c]) continue;
      std::size_t reg = 1;
      while (reg <= p_ && (image.count(reg) ||
                           std::find(allocated.begin(), allocated.end(),
                                     reg) != allocated.end()))
        ++reg;
      if (reg > p_) throw std::logic_error("hl_to_topl: out of registers");
      allocated.push_back(reg);
      target[c] = reg;
      action.assignments.push_back(Assignment{reg, c});
    }
    for (auto& v : t.r)
      if (v > p_) v = target[v - p_];
    for (const auto& pr : know.unknown)
      if (image.count(pr.first) && image.count(pr.second))
        t.unknown.insert(pr);
    for (std::size_t i = 0; i < allocated.size(); ++i)
      for (std::size_t j = i + 1; j < allocated.size(); ++j)
        t.unknown.insert(ordered(allocated[i], allocated[j]));

    const StateId from = ids_.at(*p.s);
    const StateId to = state_id(t);
    Label label{Guard{atoms}, std::move(action)};
    if (emitted_.insert({from, to, to_string(label)}).second)
      res_.add_transition(from, std::move(label), to);
  }

  const HlAutomaton& a_;
  std::size_t m_, n_, d_, p_, v_;
  std::vector<std::vector<std::size_t>> out_;
  ToplAutomaton res_;
  std::map<SimState, StateId> ids_;
  std::deque<SimState> work_;
  std::set<std::tuple<StateId, StateId, std::string>> emitted_;
};

}  // namespace

ToplAutomaton hl_to_topl(const HlAutomaton& automaton) {
  require_valid(automaton);
  for (const auto& t : automaton.transitions)
    for (const auto& l : t.label)
      if (has_method_atoms(l.guard))
        throw StructuralError(
            "method guards cannot be simulated over saved letters");
  return ToplBuilder(automaton).build();
}

}  // namespace topl
