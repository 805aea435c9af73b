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

#include "topl/json_io.hpp"

#include <map>

#include "topl/errors.hpp"

namespace topl {

json to_json(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::bottom: return json{{"bottom", true}};
    case Value::Kind::atom: return json{{"atom", v.text()}};
    case Value::Kind::event:
      return json{{"event",
                   {{"kind", std::string(to_string(v.event_kind()))},
                    {"method", v.text()}}}};
  }
  return nullptr;
}

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw StructuralError("automaton JSON: " + what);
}

std::size_t index_field(const json& j, const char* what) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0)
    bad(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

std::pair<std::size_t, std::size_t> index_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("expected [register, position]");
  return {index_field(j[0], "register"), index_field(j[1], "position")};
}

EventKind kind_from_json(const json& j) {
  if (j == "call") return EventKind::call;
  if (j == "ret") return EventKind::ret;
  bad("event kind must be \"call\" or \"ret\"");
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

}  // namespace

Value value_from_json(const json& j) {
  if (j.is_null()) return Value::bottom();
  if (j.is_string()) return Value::atom(j.get<std::string>());
  if (j.is_object()) {
    if (j.contains("atom") && j["atom"].is_string())
      return Value::atom(j["atom"].get<std::string>());
    if (j.contains("bottom")) return Value::bottom();
    if (j.contains("event")) {
      const auto& e = j["event"];
      if (!e.is_object() || !e.contains("method") || !e["method"].is_string())
        bad("event value needs kind and method");
      return Value::event(kind_from_json(field(e, "kind")),
                          e["method"].get<std::string>());
    }
  }
  bad("unrecognised value " + j.dump());
}

json to_json(const Label& label) {
  json guard = json::array();
  for (const auto& atom : label.guard.conjuncts) {
    if (const auto* e = std::get_if<EqAtom>(&atom)) {
      guard.push_back({{"eq", {e->reg, e->pos}}});
    } else if (const auto* ne = std::get_if<NeqAtom>(&atom)) {
      guard.push_back({{"neq", {ne->reg, ne->pos}}});
    } else {
      const auto& m = std::get<MethodAtom>(atom);
      guard.push_back({{"method",
                        {{"pos", m.pos},
                         {"kind", std::string(to_string(m.kind))},
                         {"patterns", m.pattern.alternatives},
                         {"negated", m.negated}}}});
    }
  }
  json action = json::array();
  for (const auto& a : label.action.assignments)
    action.push_back({{"set", {a.reg, a.pos}}});
  return json{{"guard", guard}, {"action", action}};
}

Label label_from_json(const json& j) {
  if (!j.is_object()) bad("label must be an object");
  Label label;
  if (j.contains("guard")) {
    const auto& g = j["guard"];
    if (!g.is_array()) bad("guard must be an array of atoms");
    for (const auto& atom : g) {
      if (!atom.is_object() || atom.size() != 1) bad("malformed guard atom");
      if (atom.contains("eq")) {
        auto [r, p] = index_pair(atom["eq"]);
        label.guard.conjuncts.push_back(EqAtom{r, p});
      } else if (atom.contains("neq")) {
        auto [r, p] = index_pair(atom["neq"]);
        label.guard.conjuncts.push_back(NeqAtom{r, p});
      } else if (atom.contains("method")) {
        const auto& m = atom["method"];
        MethodAtom ma;
        ma.pos = index_field(field(m, "pos"), "pos");
        ma.kind = kind_from_json(field(m, "kind"));
        const auto& pats = field(m, "patterns");
        if (!pats.is_array()) bad("method patterns must be an array");
        for (const auto& p : pats) {
          if (!p.is_string()) bad("method patterns must be strings");
          ma.pattern.alternatives.push_back(p.get<std::string>());
        }
        ma.negated = m.value("negated", false);
        label.guard.conjuncts.push_back(std::move(ma));
      } else {
        bad("unknown guard atom " + atom.dump());
      }
    }
  }
  if (j.contains("action")) {
    const auto& a = j["action"];
    if (!a.is_array()) bad("action must be an array");
    for (const auto& s : a) {
      if (!s.is_object() || !s.contains("set")) bad("malformed assignment");
      auto [r, p] = index_pair(s["set"]);
      label.action.assignments.push_back(Assignment{r, p});
    }
  }
  return label;
}

namespace {

template <typename L>
json common_to_json(const Automaton<L>& a, const char* kind) {
  json store = json::array();
  for (const auto& v : a.initial_store) store.push_back(to_json(v));
  json finals = json::array();
  for (StateId q = 0; q < a.states.size(); ++q)
    if (a.is_final(q)) finals.push_back(a.states[q]);
  return json{{"kind", kind},
              {"arity", a.arity},
              {"registers", a.registers},
              {"states", a.states},
              {"initial", a.states.at(a.initial)},
              {"store", store},
              {"final", finals}};
}

template <typename L>
void common_from_json(const json& j, Automaton<L>& a) {
  a.arity = index_field(field(j, "arity"), "arity");
  const auto& regs = field(j, "registers");
  if (!regs.is_number_unsigned()) bad("registers must be a natural number");
  a.registers = regs.get<std::size_t>();
  const auto& states = field(j, "states");
  if (!states.is_array() || states.empty()) bad("states must be a non-empty array");
  for (const auto& s : states) {
    if (!s.is_string()) bad("state names must be strings");
    if (a.find_state(s.get<std::string>())) bad("duplicate state " + s.dump());
    a.add_state(s.get<std::string>());
  }
  auto state = [&](const json& name) {
    if (!name.is_string()) bad("state reference must be a string");
    auto id = a.find_state(name.get<std::string>());
    if (!id) bad("unknown state " + name.dump());
    return *id;
  };
  a.initial = state(field(j, "initial"));
  const auto& store = field(j, "store");
  if (!store.is_array()) bad("store must be an array");
  for (const auto& v : store) a.initial_store.push_back(value_from_json(v));
  if (j.contains("final")) {
    if (!j["final"].is_array()) bad("final must be an array");
    for (const auto& f : j["final"]) a.final[state(f)] = true;
  }
  const auto& ts = field(j, "transitions");
  if (!ts.is_array()) bad("transitions must be an array");
  for (const auto& t : ts) {
    if (!t.is_object()) bad("transition must be an object");
    const StateId from = state(field(t, "from"));
    const StateId to = state(field(t, "to"));
    if constexpr (std::is_same_v<L, Label>) {
      a.add_transition(from, label_from_json(t), to);
    } else {
      const auto& labels = field(t, "labels");
      if (!labels.is_array()) bad("labels must be an array");
      LabelSeq seq;
      for (const auto& l : labels) seq.push_back(label_from_json(l));
      a.add_transition(from, std::move(seq), to);
    }
  }
}

}  // namespace

json to_json(const ToplAutomaton& a) {
  json j = common_to_json(a, "topl");
  json ts = json::array();
  for (const auto& t : a.transitions) {
    json l = to_json(t.label);
    ts.push_back({{"from", a.states.at(t.from)},
                  {"guard", l["guard"]},
                  {"action", l["action"]},
                  {"to", a.states.at(t.to)}});
  }
  j["transitions"] = ts;
  return j;
}

json to_json(const HlAutomaton& a) {
  json j = common_to_json(a, "hl");
  json ts = json::array();
  for (const auto& t : a.transitions) {
    json labels = json::array();
    for (const auto& l : t.label) labels.push_back(to_json(l));
    ts.push_back({{"from", a.states.at(t.from)},
                  {"labels", labels},
                  {"to", a.states.at(t.to)}});
  }
  j["transitions"] = ts;
  return j;
}

json to_json(const EventSchema& schema) {
  json vars = json::object();
  for (const auto& [name, reg] : schema.variables) vars[name] = reg;
  json consts = json::object();
  for (const auto& [reg, text] : schema.constants)
    consts[std::to_string(reg)] = text;
  return json{{"n", schema.n}, {"variables", vars}, {"constants", consts}};
}

EventSchema schema_from_json(const json& j) {
  EventSchema s;
  const auto& n = field(j, "n");
  if (!n.is_number_unsigned()) bad("events.n must be a natural number");
  s.n = n.get<std::size_t>();
  if (j.contains("variables"))
    for (const auto& [name, reg] : j["variables"].items())
      s.variables[name] = index_field(reg, "variable register");
  if (j.contains("constants"))
    for (const auto& [reg, text] : j["constants"].items()) {
      if (!text.is_string()) bad("constant values must be strings");
      try {
        s.constants[std::stoul(reg)] = text.get<std::string>();
      } catch (const std::exception&) {
        bad("constant keys must be register numbers");
      }
    }
  return s;
}

json to_json(const CompiledProperty& p) {
  json j = to_json(p.automaton);
  j["name"] = p.name;
  j["events"] = to_json(p.schema);
  return j;
}

LoadedAutomaton automaton_from_json(const json& j) {
  if (!j.is_object()) bad("expected an object");
  const std::string kind = j.value("kind", "topl");
  LoadedAutomaton out{ToplAutomaton{}, std::nullopt, j.value("name", "")};
  if (kind == "hl") {
    HlAutomaton a;
    common_from_json(j, a);
    out.automaton = std::move(a);
  } else if (kind == "topl") {
    ToplAutomaton a;
    common_from_json(j, a);
    out.automaton = std::move(a);
  } else {
    bad("kind must be \"topl\" or \"hl\"");
  }
  if (j.contains("events")) out.schema = schema_from_json(j["events"]);
  return out;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) throw StructuralError("word must be an array of letters");
  Word w;
  for (const auto& letter : j) {
    if (!letter.is_array())
      throw StructuralError("each letter must be an array of values");
    Letter l;
    for (const auto& v : letter) l.push_back(value_from_json(v));
    w.push_back(std::move(l));
  }
  return w;
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& letter : w) {
    json l = json::array();
    for (const auto& v : letter) {
      if (v.is_atom())
        l.push_back(v.text());
      else if (v.is_bottom())
        l.push_back(nullptr);
      else
        l.push_back(to_json(v));
    }
    out.push_back(std::move(l));
  }
  return out;
}

json to_json(const Verdict& v) {
  json j{{"event", v.event}};
  if (v.path) {
    json path = json::array();
    for (const auto& s : *v.path) {
      json step{{"first_event", s.first_event}, {"last_event", s.last_event}};
      step["transition"] = s.transition ? json(*s.transition) : json(nullptr);
      path.push_back(std::move(step));
    }
    j["path"] = std::move(path);
  }
  return j;
}

json to_json(const Report& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return json{{"verdicts", verdicts},
              {"statistics",
               {{"events", r.stats.events},
                {"peak_active", r.stats.peak_active},
                {"dropped", r.stats.dropped}}},
              {"stopped_early", r.stopped_early},
              {"warnings", r.warnings}};
}

}  // namespace topl
