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

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "topl/automaton.hpp"
#include "topl/monitor.hpp"
#include "topl/property.hpp"

namespace topl {

using json = nlohmann::json;

json to_json(const Value& v);
/// Accepts the tagged object forms, plain strings (atoms) and null (bottom).
Value value_from_json(const json& j);

json to_json(const Label& label);
Label label_from_json(const json& j);

json to_json(const ToplAutomaton& a);
json to_json(const HlAutomaton& a);
json to_json(const EventSchema& schema);
json to_json(const CompiledProperty& p);

struct LoadedAutomaton {
  std::variant<ToplAutomaton, HlAutomaton> automaton;
  std::optional<EventSchema> schema;
  std::string name;

  bool is_hl() const { return automaton.index() == 1; }
};

/// Throws StructuralError on schema violations.
LoadedAutomaton automaton_from_json(const json& j);
EventSchema schema_from_json(const json& j);

Word word_from_json(const json& j);
json word_to_json(const Word& w);

json to_json(const Verdict& v);
json to_json(const Report& r);

}  // namespace topl
