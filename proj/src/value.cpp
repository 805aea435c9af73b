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

#include "topl/value.hpp"

namespace topl {

std::string_view to_string(EventKind kind) {
  return kind == EventKind::call ? "call" : "ret";
}

std::string to_string(const Value& value) {
  switch (value.kind()) {
    case Value::Kind::bottom:
      return "_";
    case Value::Kind::atom:
      return value.text();
    case Value::Kind::event:
      return std::string(to_string(value.event_kind())) + " " + value.text();
  }
  return {};
}

std::string to_string(const Letter& letter) {
  std::string out = "(";
  for (std::size_t i = 0; i < letter.size(); ++i) {
    if (i) out += ",";
    out += to_string(letter[i]);
  }
  return out + ")";
}

std::string to_string(const Word& word) {
  if (word.empty()) return "eps";
  std::string out;
  for (const auto& letter : word) out += to_string(letter);
  return out;
}

std::size_t ValueHash::operator()(const Value& v) const noexcept {
  std::size_t h = std::hash<std::string>{}(v.text());
  h ^= (static_cast<std::size_t>(v.kind()) << 1) +
       static_cast<std::size_t>(v.event_kind()) + 0x9e3779b97f4a7c15ULL +
       (h << 6) + (h >> 2);
  return h;
}

std::size_t StoreHash::operator()(const Store& s) const noexcept {
  std::size_t h = s.size();
  ValueHash vh;
  for (const auto& v : s) h ^= vh(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace topl
