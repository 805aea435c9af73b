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
#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topl/automaton.hpp"
#include "topl/hl_automaton.hpp"
#include "topl/property.hpp"

namespace topl {

struct Event {
  EventKind kind = EventKind::call;
  std::string method;
  /// Receiver then arguments for calls; the single return value for returns.
  std::vector<Value> values;
};

/// Width n+2: event id, return slot, n value slots. Throws ArityError.
Letter encode_event(const Event& event, std::size_t n);

/// Parses one JSON Lines trace record. Throws TraceError.
Event parse_event_line(const std::string& line, std::size_t line_no);

struct MonitorOptions {
  std::optional<std::size_t> max_configs;
  bool record_paths = false;
  bool stop_at_first = false;
};

struct PathStep {
  /// Empty for a skip.
  std::optional<std::size_t> transition;
  /// 1-based inclusive event span.
  std::size_t first_event = 0;
  std::size_t last_event = 0;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct Verdict {
  std::size_t event = 0;
  std::optional<std::vector<PathStep>> path;
};

struct MonitorStats {
  std::size_t events = 0;
  std::size_t peak_active = 0;
  std::size_t dropped = 0;
};

class Monitor {
 public:
  Monitor(HlAutomaton automaton, MonitorOptions options = {});

  std::vector<Verdict> feed(const Letter& letter);
  /// Acceptances are reported as soon as they complete, so this only
  /// marks the end of the trace.
  std::vector<Verdict> finish();

  const MonitorStats& stats() const { return stats_; }
  std::size_t active() const { return active_.size(); }
  bool stopped() const { return stopped_; }
  const HlAutomaton& automaton() const { return automaton_; }

 private:
  struct PathNode;
  struct Entry {
    std::size_t pos = 0;
    Configuration config;
    std::shared_ptr<const PathNode> path;
  };

  std::span<const Letter> letters(std::size_t from, std::size_t to) const;
  Entry advance(const Entry& e, const HlMove& move) const;
  std::optional<Verdict> accepting() const;
  std::vector<PathStep> unwind(const std::shared_ptr<const PathNode>& p) const;

  HlAutomaton automaton_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::size_t depth_ = 1;
  MonitorOptions options_;
  std::vector<Entry> active_;
  std::vector<Letter> window_;
  std::size_t base_ = 0;
  MonitorStats stats_;
  bool stopped_ = false;
  bool finished_ = false;
};

/// Checks that a reported path is a valid accepting run on word.
bool replay_path(const HlAutomaton& automaton, std::span<const Letter> word,
                 const std::vector<PathStep>& path);

struct Report {
  std::vector<Verdict> verdicts;
  MonitorStats stats;
  std::vector<std::string> warnings;
  bool stopped_early = false;
};

/// Streams a JSON Lines trace. Strict mode rethrows malformed lines;
/// lenient mode skips them with a warning.
Report run_trace(const HlAutomaton& automaton, const EventSchema& schema,
                 std::istream& trace, const MonitorOptions& options,
                 bool strict = true);

}  // namespace topl
