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

#include "topl/topl.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "topl/closure.hpp"
#include "topl/errors.hpp"
#include "topl/hl_automaton.hpp"
#include "topl/json_io.hpp"
#include "topl/monitor.hpp"
#include "topl/property.hpp"
#include "topl/translate.hpp"

struct topl_automaton {
  topl::LoadedAutomaton loaded;
};

struct topl_monitor {
  std::unique_ptr<topl::Monitor> monitor;
  std::optional<std::size_t> n;
  topl::Report report;
};

namespace {

thread_local std::string last_error;

template <typename F>
topl_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const topl::ParseError& e) {
    last_error = e.what();
    return TOPL_ERR_PARSE;
  } catch (const topl::TraceError& e) {
    last_error = e.what();
    return TOPL_ERR_TRACE;
  } catch (const topl::CompileError& e) {
    last_error = e.what();
    return TOPL_ERR_COMPILE;
  } catch (const topl::ArityError& e) {
    last_error = e.what();
    return TOPL_ERR_ARITY;
  } catch (const topl::Error& e) {
    last_error = e.what();
    return TOPL_ERR_STRUCTURE;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return TOPL_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return TOPL_ERR_INTERNAL;
  }
}

topl_status argument_error(const char* what) {
  last_error = what;
  return TOPL_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

topl_automaton* wrap(topl::LoadedAutomaton loaded) {
  return new topl_automaton{std::move(loaded)};
}

topl::ToplAutomaton as_topl(const topl::LoadedAutomaton& l) {
  if (l.is_hl()) return topl::hl_to_topl(std::get<topl::HlAutomaton>(l.automaton));
  return std::get<topl::ToplAutomaton>(l.automaton);
}

topl::HlAutomaton as_monitorable(const topl::LoadedAutomaton& l) {
  if (l.is_hl()) return std::get<topl::HlAutomaton>(l.automaton);
  return topl::topl_to_hl(std::get<topl::ToplAutomaton>(l.automaton));
}

topl::MonitorOptions options_of(const topl_monitor_options* o) {
  topl::MonitorOptions out;
  if (!o) return out;
  if (o->max_configs) out.max_configs = o->max_configs;
  out.record_paths = o->record_paths != 0;
  out.stop_at_first = o->stop_at_first != 0;
  return out;
}

std::size_t value_slots(const topl::LoadedAutomaton& l) {
  if (l.schema) return l.schema->n;
  const std::size_t arity = std::visit([](const auto& a) { return a.arity; },
                                       l.automaton);
  if (arity < 2)
    throw topl::ArityError(
        "automaton arity is below 2, so it cannot read encoded events");
  return arity - 2;
}

std::string verdicts_json(const std::vector<topl::Verdict>& vs) {
  topl::json out = topl::json::array();
  for (const auto& v : vs) out.push_back(topl::to_json(v));
  return out.dump();
}

}  // namespace

extern "C" {

const char* topl_last_error(void) { return last_error.c_str(); }

const char* topl_version(void) { return "1.0.0"; }

void topl_string_free(char* s) { std::free(s); }

topl_status topl_automaton_from_json(const char* text, topl_automaton** out) {
  if (!text || !out) return argument_error("null argument");
  return guarded([&] {
    auto loaded = topl::automaton_from_json(topl::json::parse(text));
    std::visit([](const auto& a) { topl::require_valid(a); }, loaded.automaton);
    *out = wrap(std::move(loaded));
    return TOPL_OK;
  });
}

topl_status topl_compile_property(const char* source, topl_automaton** out) {
  if (!source || !out) return argument_error("null argument");
  return guarded([&] {
    auto compiled = topl::compile_property(std::string_view(source));
    *out = wrap(topl::LoadedAutomaton{std::move(compiled.automaton),
                                      std::move(compiled.schema),
                                      std::move(compiled.name)});
    return TOPL_OK;
  });
}

topl_status topl_automaton_to_json(const topl_automaton* a, char** out) {
  if (!a || !out) return argument_error("null argument");
  return guarded([&] {
    topl::json j = std::visit([](const auto& x) { return topl::to_json(x); },
                              a->loaded.automaton);
    if (!a->loaded.name.empty()) j["name"] = a->loaded.name;
    if (a->loaded.schema) j["events"] = topl::to_json(*a->loaded.schema);
    *out = copy_string(j.dump(2) + "\n");
    return TOPL_OK;
  });
}

topl_status topl_automaton_info_get(const topl_automaton* a,
                                    topl_automaton_info* out) {
  if (!a || !out) return argument_error("null argument");
  return guarded([&] {
    std::visit(
        [&](const auto& x) {
          out->arity = x.arity;
          out->registers = x.registers;
          out->states = x.states.size();
          out->transitions = x.transitions.size();
        },
        a->loaded.automaton);
    out->is_hl = a->loaded.is_hl();
    out->max_label_length =
        a->loaded.is_hl()
            ? topl::max_label_length(std::get<topl::HlAutomaton>(a->loaded.automaton))
            : 1;
    return TOPL_OK;
  });
}

void topl_automaton_free(topl_automaton* a) { delete a; }

topl_status topl_validate(const topl_automaton* a, char** out) {
  if (!a || !out) return argument_error("null argument");
  return guarded([&] {
    const auto diags = std::visit(
        [](const auto& x) { return topl::validate_automaton(x); },
        a->loaded.automaton);
    *out = copy_string(topl::json(diags).dump());
    if (diags.empty()) return TOPL_OK;
    last_error = diags.front();
    return TOPL_ERR_STRUCTURE;
  });
}

topl_status topl_translate(const topl_automaton* a, topl_target target,
                           topl_automaton** out) {
  if (!a || !out) return argument_error("null argument");
  return guarded([&] {
    const auto& l = a->loaded;
    topl::LoadedAutomaton result{topl::ToplAutomaton{}, std::nullopt, l.name};
    switch (target) {
      case TOPL_TARGET_RA:
        result.automaton = topl::topl_to_ra(as_topl(l)).automaton();
        break;
      case TOPL_TARGET_TOPL:
        result.automaton = as_topl(l);
        result.schema = l.schema;
        break;
      case TOPL_TARGET_HL:
        result.automaton = as_monitorable(l);
        result.schema = l.schema;
        break;
      default:
        return argument_error("unknown translation target");
    }
    *out = wrap(std::move(result));
    return TOPL_OK;
  });
}

topl_status topl_closure(const topl_automaton* a, const topl_automaton* b,
                         topl_closure_op op, topl_automaton** out) {
  if (!a || !b || !out) return argument_error("null argument");
  return guarded([&] {
    if (a->loaded.is_hl() || b->loaded.is_hl())
      throw topl::StructuralError("closure constructions take TOPL automata");
    const auto& x = std::get<topl::ToplAutomaton>(a->loaded.automaton);
    const auto& y = std::get<topl::ToplAutomaton>(b->loaded.automaton);
    topl::ToplAutomaton r;
    switch (op) {
      case TOPL_UNION: r = topl::union_of(x, y); break;
      case TOPL_INTERSECTION: r = topl::intersection_of(x, y); break;
      case TOPL_CONCAT: r = topl::concat_of(x, y); break;
      default: return argument_error("unknown closure operation");
    }
    *out = wrap(topl::LoadedAutomaton{std::move(r), std::nullopt, ""});
    return TOPL_OK;
  });
}

topl_status topl_emptiness(const topl_automaton* a, int* is_empty,
                           char** witness_json) {
  if (!a || !is_empty) return argument_error("null argument");
  return guarded([&] {
    const auto r = std::visit(
        [](const auto& x) { return topl::emptiness(x); }, a->loaded.automaton);
    *is_empty = r.empty ? 1 : 0;
    if (witness_json)
      *witness_json =
          r.witness ? copy_string(topl::word_to_json(*r.witness).dump()) : nullptr;
    return TOPL_OK;
  });
}

topl_status topl_member(const topl_automaton* a, const char* word_json,
                        int* accepted) {
  if (!a || !word_json || !accepted) return argument_error("null argument");
  return guarded([&] {
    const topl::Word w = topl::word_from_json(topl::json::parse(word_json));
    const std::size_t arity =
        std::visit([](const auto& x) { return x.arity; }, a->loaded.automaton);
    for (const auto& letter : w)
      if (letter.size() != arity)
        throw topl::ArityError("letter " + topl::to_string(letter) +
                               " has width " + std::to_string(letter.size()) +
                               ", automaton expects " + std::to_string(arity));
    if (a->loaded.is_hl())
      *accepted = topl::hl_accepts(std::get<topl::HlAutomaton>(a->loaded.automaton), w);
    else
      *accepted = topl::accepts(std::get<topl::ToplAutomaton>(a->loaded.automaton), w);
    return TOPL_OK;
  });
}

topl_status topl_monitor_new(const topl_automaton* a,
                             const topl_monitor_options* options,
                             topl_monitor** out) {
  if (!a || !out) return argument_error("null argument");
  return guarded([&] {
    auto m = std::make_unique<topl_monitor>();
    m->monitor = std::make_unique<topl::Monitor>(as_monitorable(a->loaded),
                                                 options_of(options));
    try {
      m->n = value_slots(a->loaded);
    } catch (const topl::ArityError&) {
    }
    *out = m.release();
    return TOPL_OK;
  });
}

topl_status topl_monitor_feed_event(topl_monitor* m, const char* event_json,
                                    char** verdicts_json_out) {
  if (!m || !event_json) return argument_error("null argument");
  return guarded([&] {
    if (!m->n)
      throw topl::ArityError(
          "automaton arity is below 2, so it cannot read encoded events");
    const auto ev = topl::parse_event_line(event_json, m->report.stats.events + 1);
    auto vs = m->monitor->feed(topl::encode_event(ev, *m->n));
    if (verdicts_json_out) *verdicts_json_out = copy_string(verdicts_json(vs));
    for (auto& v : vs) m->report.verdicts.push_back(std::move(v));
    m->report.stats = m->monitor->stats();
    return TOPL_OK;
  });
}

topl_status topl_monitor_feed_letter(topl_monitor* m, const char* letter_json,
                                     char** verdicts_json_out) {
  if (!m || !letter_json) return argument_error("null argument");
  return guarded([&] {
    const auto j = topl::json::parse(letter_json);
    topl::Word w = topl::word_from_json(topl::json::array({j}));
    auto vs = m->monitor->feed(w.front());
    if (verdicts_json_out) *verdicts_json_out = copy_string(verdicts_json(vs));
    for (auto& v : vs) m->report.verdicts.push_back(std::move(v));
    m->report.stats = m->monitor->stats();
    return TOPL_OK;
  });
}

topl_status topl_monitor_finish(topl_monitor* m, char** report_json) {
  if (!m) return argument_error("null argument");
  return guarded([&] {
    for (auto& v : m->monitor->finish()) m->report.verdicts.push_back(std::move(v));
    m->report.stats = m->monitor->stats();
    m->report.stopped_early = m->monitor->stopped();
    if (report_json) *report_json = copy_string(topl::to_json(m->report).dump());
    return TOPL_OK;
  });
}

void topl_monitor_free(topl_monitor* m) { delete m; }

topl_status topl_run_trace_file(const topl_automaton* a, const char* path,
                                const topl_monitor_options* options,
                                int strict, char** report_json) {
  if (!a || !path || !report_json) return argument_error("null argument");
  return guarded([&] {
    std::ifstream in(path);
    if (!in) {
      last_error = std::string("cannot open trace ") + path;
      return TOPL_ERR_IO;
    }
    topl::EventSchema schema;
    schema.n = value_slots(a->loaded);
    if (a->loaded.schema) schema = *a->loaded.schema;
    const auto report = topl::run_trace(as_monitorable(a->loaded), schema, in,
                                        options_of(options), strict != 0);
    *report_json = copy_string(topl::to_json(report).dump());
    return TOPL_OK;
  });
}

}  // extern "C"
