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
#include <map>
#include <optional>
#include <set>
#include <string>

#include "topl/errors.hpp"
#include "topl/property.hpp"

namespace topl {

namespace {

using VarSet = std::set<std::string>;

void collect_binds(const Pattern& p, std::map<std::string, int>& count) {
  if (p.kind == Pattern::Kind::bind) ++count[p.text];
}

// Patterns of the call part, in letter order.
std::vector<const Pattern*> call_patterns(const PropLabel& l) {
  std::vector<const Pattern*> out;
  if (l.kind != PropLabel::Kind::call && l.kind != PropLabel::Kind::call_ret)
    return out;
  if (l.receiver) out.push_back(&*l.receiver);
  for (const auto& a : l.args) out.push_back(&a);
  return out;
}

const Pattern* result_pattern(const PropLabel& l) {
  if (l.kind == PropLabel::Kind::ret || l.kind == PropLabel::Kind::call_ret)
    return &l.result;
  return nullptr;
}

VarSet binds_of(const PropLabel& l) {
  VarSet out;
  for (const Pattern* p : call_patterns(l))
    if (p->kind == Pattern::Kind::bind) out.insert(p->text);
  if (const Pattern* r = result_pattern(l))
    if (r->kind == Pattern::Kind::bind) out.insert(r->text);
  return out;
}

bool is_read(const Pattern& p) {
  return p.kind == Pattern::Kind::read || p.kind == Pattern::Kind::not_read;
}

}  // namespace

std::vector<Diagnostic> check_well_formed(const PropertyAst& ast) {
  std::vector<Diagnostic> out;
  auto error = [&](std::size_t line, std::string msg) {
    out.push_back({Diagnostic::Severity::error, line, std::move(msg)});
  };

  std::set<std::string> vertices;
  for (const auto& t : ast.transitions) {
    vertices.insert(t.source);
    vertices.insert(t.target);
  }
  if (!vertices.count("start")) error(0, "missing vertex 'start'");
  if (!vertices.count("error")) error(0, "missing vertex 'error'");

  for (const auto& t : ast.transitions) {
    std::map<std::string, int> count;
    for (const Pattern* p : call_patterns(t.label)) collect_binds(*p, count);
    if (const Pattern* r = result_pattern(t.label)) collect_binds(*r, count);
    for (const auto& [var, k] : count)
      if (k > 1)
        error(t.line, "variable " + var + " is bound more than once in '" +
                          to_string(t.label) + "'");
    if (t.label.kind == PropLabel::Kind::ret && t.label.receiver &&
        t.label.receiver->kind != Pattern::Kind::wildcard)
      error(t.line, "ret labels cannot constrain the receiver");
    if (t.source == "error")
      out.push_back({Diagnostic::Severity::warning, t.line,
                     "transition leaves the error vertex"});
  }

  // Variables bound on every path from start.
  std::map<std::string, std::optional<VarSet>> in;
  in["start"] = VarSet{};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : ast.transitions) {
      const auto& src = in[t.source];
      if (!src || t.target == "start") continue;
      VarSet after = *src;
      for (const auto& v : binds_of(t.label)) after.insert(v);
      auto& dst = in[t.target];
      if (!dst) {
        dst = std::move(after);
        changed = true;
        continue;
      }
      VarSet meet;
      std::set_intersection(dst->begin(), dst->end(), after.begin(),
                            after.end(), std::inserter(meet, meet.end()));
      if (meet != *dst) {
        dst = std::move(meet);
        changed = true;
      }
    }
  }

  for (const auto& t : ast.transitions) {
    const auto& src = in[t.source];
    if (!src) continue;
    auto check = [&](const Pattern& p, const VarSet& bound) {
      if (is_read(p) && !bound.count(p.text))
        error(t.line, "variable " + p.text +
                          " may be read before it is bound (in '" +
                          to_string(t.label) + "')");
    };
    for (const Pattern* p : call_patterns(t.label)) check(*p, *src);
    if (const Pattern* r = result_pattern(t.label)) {
      VarSet bound = *src;
      for (const Pattern* p : call_patterns(t.label))
        if (p->kind == Pattern::Kind::bind) bound.insert(p->text);
      check(*r, bound);
    }
  }
  return out;
}

namespace {

class Compiler {
 public:
  explicit Compiler(const PropertyAst& ast) : ast_(ast) {}

  CompiledProperty run() {
    for (const auto& d : check_well_formed(ast_))
      if (d.severity == Diagnostic::Severity::error)
        throw CompileError(d.line ? "line " + std::to_string(d.line) + ": " +
                                        d.message
                                  : d.message);
    assign_registers();
    infer_arity();

    CompiledProperty out;
    out.name = ast_.name;
    out.schema = schema_;
    HlAutomaton& a = out.automaton;
    a.arity = schema_.width();
    a.registers = registers_;
    a.initial_store.assign(registers_, Value::bottom());
    for (const auto& [reg, text] : schema_.constants)
      a.initial_store[reg - 1] = Value::atom(text);

    std::map<std::string, StateId> ids;
    auto state = [&](const std::string& v) {
      auto it = ids.find(v);
      if (it != ids.end()) return it->second;
      const StateId id = a.add_state(v, v == "error");
      ids.emplace(v, id);
      return id;
    };
    a.initial = state("start");
    for (const auto& t : ast_.transitions) {
      state(t.source);
      state(t.target);
    }
    for (const auto& t : ast_.transitions)
      a.add_transition(ids.at(t.source), compile_label(t.label),
                       ids.at(t.target));
    return out;
  }

 private:
  void use(const Pattern& p) {
    if (p.is_variable()) {
      if (!schema_.variables.count(p.text))
        schema_.variables.emplace(p.text, schema_.variables.size() + 1);
    } else if (p.kind == Pattern::Kind::literal) {
      if (std::find(literals_.begin(), literals_.end(), p.text) ==
          literals_.end())
        literals_.push_back(p.text);
    }
  }

  // Variables in first-use order, then one register per literal.
  void assign_registers() {
    for (const auto& t : ast_.transitions) {
      if (const Pattern* r = result_pattern(t.label)) use(*r);
      for (const Pattern* p : call_patterns(t.label)) use(*p);
    }
    registers_ = schema_.variables.size();
    for (const auto& lit : literals_) {
      ++registers_;
      schema_.constants.emplace(registers_, lit);
      constant_reg_.emplace(lit, registers_);
    }
  }

  void infer_arity() {
    std::map<std::string, std::pair<std::size_t, std::size_t>> fixed;
    for (const auto& t : ast_.transitions) {
      const auto& l = t.label;
      if (l.kind != PropLabel::Kind::call && l.kind != PropLabel::Kind::call_ret)
        continue;
      const std::size_t k = (l.receiver ? 1 : 0) + (l.any_args ? 0 : l.args.size());
      schema_.n = std::max(schema_.n, k);
      const bool concrete = l.method.glob.find_first_of("*|") == std::string::npos;
      if (l.any_args || l.method.negated || !concrete) continue;
      auto [it, fresh] = fixed.try_emplace(l.method.glob, k, t.line);
      if (!fresh && it->second.first != k)
        throw CompileError("line " + std::to_string(t.line) + ": method " +
                           l.method.glob + " used with " + std::to_string(k) +
                           " values here but " +
                           std::to_string(it->second.first) + " on line " +
                           std::to_string(it->second.second));
    }
  }

  MethodPattern expand(const std::string& glob) const {
    MethodPattern p;
    std::size_t begin = 0;
    while (true) {
      const std::size_t bar = glob.find('|', begin);
      const std::string alt = glob.substr(begin, bar - begin);
      if (!alt.empty()) {
        p.alternatives.push_back(alt);
        for (const auto& prefix : ast_.prefixes)
          p.alternatives.push_back(prefix + "." + alt);
      }
      if (bar == std::string::npos) break;
      begin = bar + 1;
    }
    return p;
  }

  void method_guard(Guard& g, const MethodSpec& m, EventKind kind) const {
    if (m.negated) {
      g.conjuncts.push_back(MethodAtom{1, kind, MethodPattern{{"*"}}, false});
      g.conjuncts.push_back(MethodAtom{1, kind, expand(m.glob), true});
    } else {
      g.conjuncts.push_back(MethodAtom{1, kind, expand(m.glob), false});
    }
  }

  void pattern(const Pattern& p, std::size_t pos, Label& label) const {
    switch (p.kind) {
      case Pattern::Kind::bind:
        label.action.assignments.push_back(
            Assignment{schema_.variables.at(p.text), pos});
        break;
      case Pattern::Kind::read:
        label.guard.conjuncts.push_back(EqAtom{schema_.variables.at(p.text), pos});
        break;
      case Pattern::Kind::not_read:
        label.guard.conjuncts.push_back(NeqAtom{schema_.variables.at(p.text), pos});
        break;
      case Pattern::Kind::literal:
        label.guard.conjuncts.push_back(EqAtom{constant_reg_.at(p.text), pos});
        break;
      case Pattern::Kind::wildcard:
        break;
    }
  }

  Label call_label(const PropLabel& l) const {
    Label label;
    method_guard(label.guard, l.method, EventKind::call);
    std::size_t pos = 3;
    for (const Pattern* p : call_patterns(l)) pattern(*p, pos++, label);
    return label;
  }

  Label ret_label(const PropLabel& l) const {
    Label label;
    method_guard(label.guard, l.method, EventKind::ret);
    pattern(l.result, 2, label);
    return label;
  }

  LabelSeq compile_label(const PropLabel& l) const {
    switch (l.kind) {
      case PropLabel::Kind::any: return {Label{}};
      case PropLabel::Kind::call: return {call_label(l)};
      case PropLabel::Kind::ret: return {ret_label(l)};
      case PropLabel::Kind::call_ret: return {call_label(l), ret_label(l)};
    }
    return {};
  }

  const PropertyAst& ast_;
  EventSchema schema_;
  std::size_t registers_ = 0;
  std::vector<std::string> literals_;
  std::map<std::string, std::size_t> constant_reg_;
};

}  // namespace

CompiledProperty compile_property(const PropertyAst& ast) {
  return Compiler(ast).run();
}

CompiledProperty compile_property(std::string_view text) {
  return compile_property(parse_property(text));
}

}  // namespace topl
