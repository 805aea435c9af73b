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

#include "topl/monitor.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include <json.hpp>

#include "topl/errors.hpp"

namespace topl {

Letter encode_event(const Event& event, std::size_t n) {
  Letter letter(n + 2, Value::bottom());
  letter[0] = Value::event(event.kind, event.method);
  if (event.kind == EventKind::ret) {
    if (event.values.size() > 1)
      throw ArityError("return event for " + event.method +
                       " carries more than one value");
    if (!event.values.empty()) letter[1] = event.values[0];
    return letter;
  }
  if (event.values.size() > n)
    throw ArityError("call to " + event.method + " has " +
                     std::to_string(event.values.size()) +
                     " values but the property allows at most " +
                     std::to_string(n));
  for (std::size_t i = 0; i < event.values.size(); ++i)
    letter[i + 2] = event.values[i];
  return letter;
}

namespace {

Value json_value(const nlohmann::json& j, std::size_t line_no) {
  if (j.is_null()) return Value::bottom();
  if (j.is_string()) return Value::atom(j.get<std::string>());
  if (j.is_number() || j.is_boolean()) return Value::atom(j.dump());
  throw TraceError(line_no, "values must be strings, numbers, booleans or null");
}

}  // namespace

Event parse_event_line(const std::string& line, std::size_t line_no) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw TraceError(line_no, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw TraceError(line_no, "expected a JSON object");
  Event ev;
  const auto kind = j.find("kind");
  if (kind == j.end() || !kind->is_string())
    throw TraceError(line_no, "missing \"kind\"");
  if (*kind == "call")
    ev.kind = EventKind::call;
  else if (*kind == "ret")
    ev.kind = EventKind::ret;
  else
    throw TraceError(line_no, "kind must be \"call\" or \"ret\"");
  const auto method = j.find("method");
  if (method == j.end() || !method->is_string())
    throw TraceError(line_no, "missing \"method\"");
  ev.method = method->get<std::string>();
  if (ev.kind == EventKind::call) {
    const auto values = j.find("values");
    if (values != j.end()) {
      if (!values->is_array())
        throw TraceError(line_no, "\"values\" must be an array");
      for (const auto& v : *values) ev.values.push_back(json_value(v, line_no));
    }
  } else {
    const auto value = j.find("value");
    ev.values.push_back(value == j.end() ? Value::bottom()
                                         : json_value(*value, line_no));
  }
  return ev;
}

struct Monitor::PathNode {
  HlStep step;
  std::shared_ptr<const PathNode> parent;
};

namespace {

struct Key {
  std::size_t pos;
  StateId state;
  const Store* store;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = StoreHash{}(*k.store);
    h ^= k.pos * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= k.state * 0xbf58476d1ce4e5b9ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct KeyEq {
  bool operator()(const Key& a, const Key& b) const {
    return a.pos == b.pos && a.state == b.state && *a.store == *b.store;
  }
};

}  // namespace

Monitor::Monitor(HlAutomaton automaton, MonitorOptions options)
    : automaton_(std::move(automaton)), options_(options) {
  require_valid(automaton_);
  if (options_.max_configs && *options_.max_configs == 0)
    throw Error("max_configs must be positive");
  outgoing_ = automaton_.outgoing();
  depth_ = std::max<std::size_t>(1, max_label_length(automaton_));
  active_.push_back(
      Entry{0, Configuration{automaton_.initial, automaton_.initial_store},
            nullptr});
  stats_.peak_active = 1;
}

std::span<const Letter> Monitor::letters(std::size_t from,
                                         std::size_t to) const {
  return std::span<const Letter>(window_).subspan(from - base_, to - from);
}

Monitor::Entry Monitor::advance(const Entry& e, const HlMove& move) const {
  Entry next{e.pos + move.consumed, move.next, nullptr};
  if (options_.record_paths)
    next.path = std::make_shared<const PathNode>(
        PathNode{HlStep{move.transition, e.pos, e.pos + move.consumed}, e.path});
  return next;
}

std::vector<PathStep> Monitor::unwind(
    const std::shared_ptr<const PathNode>& p) const {
  std::vector<PathStep> out;
  for (const PathNode* n = p.get(); n; n = n->parent.get())
    out.push_back(PathStep{n->step.transition, n->step.begin + 1, n->step.end});
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Verdict> Monitor::feed(const Letter& letter) {
  if (stopped_ || finished_) return {};
  if (letter.size() != automaton_.arity)
    throw ArityError("letter has width " + std::to_string(letter.size()) +
                     ", automaton expects " +
                     std::to_string(automaton_.arity));
  window_.push_back(letter);
  const std::size_t k = ++stats_.events;

  // Commit every configuration whose next d letters are known.
  std::vector<Entry> next;
  next.reserve(active_.size());
  for (auto& e : active_) {
    if (e.pos + depth_ > k) {
      next.push_back(std::move(e));
      continue;
    }
    const auto pending = letters(e.pos, e.pos + depth_);
    for (const auto& mv : hl_moves(automaton_, outgoing_, e.config, pending))
      next.push_back(advance(e, mv));
  }
  std::unordered_set<Key, KeyHash, KeyEq> seen;
  std::vector<Entry> kept;
  kept.reserve(next.size());
  for (auto& e : next) {
    if (seen.count(Key{e.pos, e.config.state, &e.config.store})) continue;
    if (options_.max_configs && kept.size() >= *options_.max_configs) {
      ++stats_.dropped;
      seen.insert(Key{e.pos, e.config.state, &e.config.store});
      continue;
    }
    kept.push_back(std::move(e));
    seen.insert(Key{kept.back().pos, kept.back().config.state,
                    &kept.back().config.store});
  }
  active_ = std::move(kept);
  stats_.peak_active = std::max(stats_.peak_active, active_.size());

  std::size_t low = k;
  for (const auto& e : active_) low = std::min(low, e.pos);
  if (low > base_ + 4096 || (active_.empty() && !window_.empty())) {
    const std::size_t cut = std::min(low, k) - base_;
    window_.erase(window_.begin(), window_.begin() + static_cast<std::ptrdiff_t>(cut));
    base_ += cut;
  }

  std::vector<Verdict> out;
  if (auto v = accepting()) {
    out.push_back(std::move(*v));
    if (options_.stop_at_first) stopped_ = true;
  }
  return out;
}

std::optional<Verdict> Monitor::accepting() const {
  const std::size_t k = stats_.events;
  // Run the pending letters to the end of the current prefix on a copy.
  std::map<std::size_t, std::vector<Entry>> layers;
  for (const auto& e : active_) layers[e.pos].push_back(e);
  while (!layers.empty()) {
    auto it = layers.begin();
    const std::size_t pos = it->first;
    std::vector<Entry> layer = std::move(it->second);
    layers.erase(it);
    std::unordered_set<Key, KeyHash, KeyEq> seen;
    if (pos == k) {
      for (const auto& e : layer) {
        if (!automaton_.is_final(e.config.state)) continue;
        Verdict v{k, std::nullopt};
        if (options_.record_paths) v.path = unwind(e.path);
        return v;
      }
      return std::nullopt;
    }
    const auto pending = letters(pos, k);
    for (const auto& e : layer) {
      if (!seen.insert(Key{e.pos, e.config.state, &e.config.store}).second)
        continue;
      for (const auto& mv : hl_moves(automaton_, outgoing_, e.config, pending))
        layers[pos + mv.consumed].push_back(advance(e, mv));
    }
  }
  return std::nullopt;
}

std::vector<Verdict> Monitor::finish() {
  finished_ = true;
  return {};
}

bool replay_path(const HlAutomaton& automaton, std::span<const Letter> word,
                 const std::vector<PathStep>& path) {
  const auto outgoing = automaton.outgoing();
  Configuration c{automaton.initial, automaton.initial_store};
  std::size_t pos = 0;
  for (const auto& step : path) {
    if (step.first_event != pos + 1 || step.last_event < step.first_event ||
        step.last_event > word.size())
      return false;
    const auto span = word.subspan(pos, step.last_event - pos);
    if (step.transition) {
      if (*step.transition >= automaton.transitions.size()) return false;
      const auto& tr = automaton.transitions[*step.transition];
      if (tr.from != c.state) return false;
      auto store = match_prefix(c.store, tr.label, span);
      if (!store) return false;
      c = Configuration{tr.to, std::move(*store)};
    } else {
      if (span.size() != 1) return false;
      const auto moves = hl_moves(automaton, outgoing, c, word.subspan(pos));
      if (moves.size() != 1 || moves[0].transition) return false;
    }
    pos = step.last_event;
  }
  return pos == word.size() && automaton.is_final(c.state);
}

Report run_trace(const HlAutomaton& automaton, const EventSchema& schema,
                 std::istream& trace, const MonitorOptions& options,
                 bool strict) {
  Monitor monitor(automaton, options);
  Report report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(trace, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Event ev;
    try {
      ev = parse_event_line(line, line_no);
    } catch (const TraceError& e) {
      if (strict) throw;
      report.warnings.push_back(std::string(e.what()) + " (skipped)");
      continue;
    }
    Letter letter;
    try {
      letter = encode_event(ev, schema.n);
    } catch (const ArityError& e) {
      throw TraceError(line_no, e.what());
    }
    for (auto& v : monitor.feed(letter)) report.verdicts.push_back(std::move(v));
    if (monitor.stopped()) {
      report.stopped_early = true;
      break;
    }
  }
  for (auto& v : monitor.finish()) report.verdicts.push_back(std::move(v));
  report.stats = monitor.stats();
  return report;
}

}  // namespace topl
