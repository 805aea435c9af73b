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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace topl {

enum class EventKind : std::uint8_t { call, ret };

std::string_view to_string(EventKind kind);

/// A data value. Values are compared for equality only; the ordering
/// operator exists so values can live in ordered containers and must not be
/// given any semantic meaning.
class Value {
 public:
  enum class Kind : std::uint8_t { bottom, atom, event };

  Value() = default;

  static Value atom(std::string id) {
    return Value(Kind::atom, EventKind::call, std::move(id));
  }
  static Value bottom() { return Value(); }
  static Value event(EventKind kind, std::string method) {
    return Value(Kind::event, kind, std::move(method));
  }

  Kind kind() const { return kind_; }
  bool is_bottom() const { return kind_ == Kind::bottom; }
  bool is_atom() const { return kind_ == Kind::atom; }
  bool is_event() const { return kind_ == Kind::event; }

  /// Atom identifier, or method name for event ids. Empty for bottom.
  const std::string& text() const { return text_; }
  EventKind event_kind() const { return event_kind_; }

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value&, const Value&) = default;

 private:
  Value(Kind kind, EventKind event_kind, std::string text)
      : kind_(kind), event_kind_(event_kind), text_(std::move(text)) {}

  Kind kind_ = Kind::bottom;
  EventKind event_kind_ = EventKind::call;
  std::string text_;
};

using Letter = std::vector<Value>;
using Store = std::vector<Value>;
using Word = std::vector<Letter>;

std::string to_string(const Value& value);
std::string to_string(const Letter& letter);
std::string to_string(const Word& word);

struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept;
};

struct StoreHash {
  std::size_t operator()(const Store& s) const noexcept;
};

}  // namespace topl
