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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "topl/topl.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitViolation = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code(topl_status s) {
  switch (s) {
    case TOPL_OK: return kExitOk;
    case TOPL_ERR_ARGUMENT:
    case TOPL_ERR_PARSE:
    case TOPL_ERR_TRACE:
    case TOPL_ERR_IO: return kExitUsage;
    default: return kExitInvalid;
  }
}

void check(topl_status s) {
  if (s != TOPL_OK) throw Failure{exit_code(s), topl_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string out = s ? s : "";
  topl_string_free(s);
  return out;
}

struct Handle {
  topl_automaton* a = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { topl_automaton_free(a); }
};

bool looks_like_property(const std::string& path, const std::string& text) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".topl") == 0)
    return true;
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] != '{';
}

void load(const std::string& path, Handle& h) {
  const std::string text = read_file(path);
  if (looks_like_property(path, text))
    check(topl_compile_property(text.c_str(), &h.a));
  else
    check(topl_automaton_from_json(text.c_str(), &h.a));
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot write " + out};
  f << text;
}

std::string text_report(const json& r) {
  std::ostringstream os;
  for (const auto& v : r["verdicts"]) {
    os << "violation at event " << v["event"].get<std::size_t>() << "\n";
    if (!v.contains("path")) continue;
    for (const auto& s : v["path"]) {
      os << "  events " << s["first_event"].get<std::size_t>() << "-"
         << s["last_event"].get<std::size_t>() << ": ";
      if (s["transition"].is_null())
        os << "skip\n";
      else
        os << "transition " << s["transition"].get<std::size_t>() << "\n";
    }
  }
  for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  const auto& st = r["statistics"];
  os << "events " << st["events"].get<std::size_t>() << ", violations "
     << r["verdicts"].size() << ", peak active "
     << st["peak_active"].get<std::size_t>() << ", dropped "
     << st["dropped"].get<std::size_t>() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal object property automata: compile, translate, decide, monitor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(topl_version()));

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* compile = app.add_subcommand("compile", "Compile a property to an hl automaton");
  std::string compile_in, compile_out;
  compile->add_option("property", compile_in, "Property source")->required();
  compile->add_option("-o,--out", compile_out, "Output file (default stdout)");

  auto* chk = app.add_subcommand("check", "Monitor a trace");
  std::string property, automaton_file, trace;
  std::size_t max_configs = 0;
  bool report_path = false, stop_at_first = false, strict = false;
  auto* prop_opt = chk->add_option("--property", property, "Property source");
  auto* aut_opt = chk->add_option("--automaton", automaton_file, "Automaton JSON");
  prop_opt->excludes(aut_opt);
  chk->add_option("--trace", trace, "JSON Lines trace")->required();
  chk->add_option("--max-configs", max_configs, "Bound on active configurations")
      ->check(CLI::PositiveNumber);
  chk->add_flag("--report-path", report_path, "Report the violating path");
  chk->add_flag("--stop-at-first", stop_at_first, "Stop at the first violation");
  chk->add_flag("--strict-trace", strict, "Abort on malformed trace lines");
  add_format(chk);

  auto* translate = app.add_subcommand("translate", "Translate between automaton models");
  std::string tr_in, tr_out, target;
  translate->add_option("automaton", tr_in, "Automaton JSON or property")->required();
  translate->add_option("--to", target, "Target model")
      ->required()
      ->check(CLI::IsMember({"ra", "topl", "hl"}));
  translate->add_option("-o,--out", tr_out, "Output file (default stdout)");

  auto* empt = app.add_subcommand("emptiness", "Decide emptiness");
  std::string em_in;
  empt->add_option("automaton", em_in, "Automaton JSON")->required();
  add_format(empt);

  auto* member = app.add_subcommand("member", "Decide membership of a word");
  std::string mem_in, word, word_file;
  member->add_option("automaton", mem_in, "Automaton JSON")->required();
  auto* word_opt = member->add_option("--word", word, "Word as a JSON array of letters");
  auto* word_file_opt = member->add_option("--word-file", word_file, "File holding the word");
  word_opt->excludes(word_file_opt);
  add_format(member);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compile) {
      Handle h;
      check(topl_compile_property(read_file(compile_in).c_str(), &h.a));
      char* out = nullptr;
      check(topl_automaton_to_json(h.a, &out));
      write_output(compile_out, take(out));
      return kExitOk;
    }

    if (*chk) {
      if (property.empty() == automaton_file.empty())
        throw Failure{kExitUsage, "check needs exactly one of --property or --automaton"};
      Handle h;
      if (!property.empty())
        check(topl_compile_property(read_file(property).c_str(), &h.a));
      else
        check(topl_automaton_from_json(read_file(automaton_file).c_str(), &h.a));
      topl_monitor_options opts{max_configs, report_path ? 1 : 0,
                                stop_at_first ? 1 : 0};
      char* out = nullptr;
      check(topl_run_trace_file(h.a, trace.c_str(), &opts, strict ? 1 : 0, &out));
      const json report = json::parse(take(out));
      if (format == "json")
        std::cout << report.dump(2) << "\n";
      else
        std::cout << text_report(report);
      return report["verdicts"].empty() ? kExitOk : kExitViolation;
    }

    if (*translate) {
      Handle h, r;
      load(tr_in, h);
      const topl_target t = target == "ra"     ? TOPL_TARGET_RA
                            : target == "topl" ? TOPL_TARGET_TOPL
                                               : TOPL_TARGET_HL;
      check(topl_translate(h.a, t, &r.a));
      char* out = nullptr;
      check(topl_automaton_to_json(r.a, &out));
      write_output(tr_out, take(out));
      return kExitOk;
    }

    if (*empt) {
      Handle h;
      load(em_in, h);
      int empty = 0;
      char* witness = nullptr;
      check(topl_emptiness(h.a, &empty, &witness));
      const std::string w = take(witness);
      if (format == "json") {
        json j{{"empty", empty != 0}};
        j["witness"] = empty ? json(nullptr) : json::parse(w);
        std::cout << j.dump() << "\n";
      } else if (empty) {
        std::cout << "empty\n";
      } else {
        std::cout << "non-empty\nwitness: " << w << "\n";
      }
      return kExitOk;
    }

    if (*member) {
      if (word.empty() == word_file.empty())
        throw Failure{kExitUsage, "member needs exactly one of --word or --word-file"};
      Handle h;
      load(mem_in, h);
      const std::string w = word.empty() ? read_file(word_file) : word;
      int accepted = 0;
      check(topl_member(h.a, w.c_str(), &accepted));
      if (format == "json")
        std::cout << json{{"accepted", accepted != 0}}.dump() << "\n";
      else
        std::cout << (accepted ? "accept" : "reject") << "\n";
      return kExitOk;
    }
  } catch (const Failure& f) {
    std::cerr << "topl: " << f.message << "\n";
    return f.code;
  }
  return kExitUsage;
}
