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

// Runs the command-line tool and checks exit codes and output.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int failures = 0;
const std::string kData = TOPL_FIXTURE_DIR;
const std::filesystem::path kTmp =
    std::filesystem::temp_directory_path() / ("topl_cli_" + std::to_string(::getpid()));

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const auto out_file = kTmp / "stdout.txt";
  const std::string cmd = std::string(TOPL_CLI) + " " + args + " > " + out_file.string() +
                          " 2> " + (kTmp / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

void expect(bool ok, const std::string& what, const Run& r) {
  if (ok) return;
  std::fprintf(stderr, "FAILED: %s (exit %d)\n%s\n", what.c_str(), r.code, r.out.c_str());
  ++failures;
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

std::string data(const std::string& name) { return kData + "/" + name; }

}  // namespace

int main() {
  std::filesystem::create_directories(kTmp);

  auto r = run("check --property " + data("taint.topl") + " --trace " +
               data("taint_violation.jsonl") + " --report-path");
  expect(r.code == 3, "violation exits with 3", r);
  expect(contains(r.out, "violation at event 3"), "violation reported at event 3", r);
  expect(contains(r.out, "events 1-2: transition 1"), "path printed", r);

  r = run("check --property " + data("taint.topl") + " --trace " + data("taint_clean.jsonl"));
  expect(r.code == 0, "clean trace exits with 0", r);
  expect(contains(r.out, "violations 0"), "clean summary", r);

  r = run("check --property " + data("taint.topl") + " --trace " +
          data("taint_violation.jsonl") + " --format json --max-configs 5");
  expect(r.code == 3, "json violation exits with 3", r);
  expect(contains(r.out, "\"verdicts\""), "json report", r);

  r = run("check --property " + data("taint.topl") + " --trace " + data("bad_trace.jsonl") +
          " --strict-trace");
  expect(r.code == 1, "malformed trace exits with 1 in strict mode", r);
  r = run("check --property " + data("taint.topl") + " --trace " + data("bad_trace.jsonl"));
  expect(r.code == 0, "malformed line skipped when lenient", r);
  expect(contains(r.out, "warning"), "lenient mode warns", r);

  const auto compiled = (kTmp / "taint.json").string();
  r = run("compile " + data("taint.topl") + " -o " + compiled);
  expect(r.code == 0, "compile succeeds", r);
  r = run("check --automaton " + compiled + " --trace " + data("taint_violation.jsonl"));
  expect(r.code == 3, "compiled automaton detects the violation", r);

  r = run("compile " + data("broken.topl"));
  expect(r.code == 1, "syntax error exits with 1", r);
  std::ofstream(kTmp / "ill.topl") << "property Ill\nstart -> error: f(x)\n";
  r = run("compile " + (kTmp / "ill.topl").string());
  expect(r.code == 2, "ill-formed property exits with 2", r);

  r = run("emptiness " + data("ab.hl.json"));
  expect(r.code == 0, "emptiness exits with 0", r);
  expect(contains(r.out, "witness"), "emptiness prints a witness", r);
  r = run("emptiness " + data("topl1.json") + " --format json");
  expect(r.code == 0 && contains(r.out, "\"empty\":false"), "json emptiness", r);

  r = run("member " + data("topl1.json") + " --word '[[\"1\"],[\"2\"],[\"3\"]]'");
  expect(r.code == 0 && contains(r.out, "accept"), "member accepts", r);
  r = run("member " + data("topl1.json") + " --word '[[\"1\"],[\"2\"],[\"1\"]]'");
  expect(r.code == 0 && contains(r.out, "reject"), "member rejects", r);
  r = run("member " + data("topl1.json") + " --word '[[\"1\",\"2\"]]'");
  expect(r.code == 2, "wrong letter width exits with 2", r);

  const auto ra = (kTmp / "ra.json").string();
  r = run("translate " + data("list_cycle.json") + " --to ra -o " + ra);
  expect(r.code == 0, "translate to ra", r);
  r = run("member " + ra + " --word '[[\"next\"],[\"v0\"],[\"v0\"]]'");
  expect(r.code == 0 && contains(r.out, "accept"), "translated RA accepts flattened word", r);
  r = run("translate " + data("ab.hl.json") + " --to topl");
  expect(r.code == 0 && contains(r.out, "\"registers\": 4"), "translate hl to topl", r);
  r = run("translate " + data("topl1.json") + " --to dfa");
  expect(r.code == 1, "unknown target exits with 1", r);

  r = run("");
  expect(r.code == 1, "missing subcommand exits with 1", r);
  r = run("check --trace " + data("taint_clean.jsonl"));
  expect(r.code == 1, "check without a property exits with 1", r);
  r = run("emptiness /nonexistent.json");
  expect(r.code == 1, "missing file exits with 1", r);

  std::filesystem::remove_all(kTmp);
  if (failures) std::fprintf(stderr, "%d failure(s)\n", failures);
  else std::printf("all CLI checks passed\n");
  return failures ? 1 : 0;
}
