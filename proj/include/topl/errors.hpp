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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An automaton (or guard, action, store) violates a structural invariant:
/// an index out of range, an unknown state, a label outside the accepted
/// fragment of a construction.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class CompileError : public Error {
 public:
  using Error::Error;
};

/// An event carries more values than the compiled schema has slots for.
class ArityError : public Error {
 public:
  using Error::Error;
};

class TraceError : public Error {
 public:
  TraceError(std::size_t line, const std::string& what)
      : Error("trace line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace topl
