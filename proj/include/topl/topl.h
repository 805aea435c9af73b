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

#ifndef TOPL_TOPL_H_
#define TOPL_TOPL_H_

#include <stddef.h>

#if defined(TOPL_BUILDING_LIBRARY)
#define TOPL_API __attribute__((visibility("default")))
#else
#define TOPL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum topl_status {
  TOPL_OK = 0,
  TOPL_ERR_ARGUMENT = 1,
  TOPL_ERR_PARSE = 2,
  TOPL_ERR_STRUCTURE = 3,
  TOPL_ERR_COMPILE = 4,
  TOPL_ERR_ARITY = 5,
  TOPL_ERR_TRACE = 6,
  TOPL_ERR_IO = 7,
  TOPL_ERR_INTERNAL = 8
} topl_status;

typedef enum topl_target {
  TOPL_TARGET_RA = 0,
  TOPL_TARGET_TOPL = 1,
  TOPL_TARGET_HL = 2
} topl_target;

typedef enum topl_closure_op {
  TOPL_UNION = 0,
  TOPL_INTERSECTION = 1,
  TOPL_CONCAT = 2
} topl_closure_op;

typedef struct topl_automaton topl_automaton;
typedef struct topl_monitor topl_monitor;

typedef struct topl_monitor_options {
  /* 0 means unbounded. */
  size_t max_configs;
  int record_paths;
  int stop_at_first;
} topl_monitor_options;

typedef struct topl_automaton_info {
  int is_hl;
  size_t arity;
  size_t registers;
  size_t states;
  size_t transitions;
  size_t max_label_length;
} topl_automaton_info;

/* Message for the last failing call on this thread. Never NULL. */
TOPL_API const char* topl_last_error(void);
TOPL_API const char* topl_version(void);
TOPL_API void topl_string_free(char* s);

TOPL_API topl_status topl_automaton_from_json(const char* text,
                                              topl_automaton** out);
TOPL_API topl_status topl_compile_property(const char* source,
                                           topl_automaton** out);
TOPL_API topl_status topl_automaton_to_json(const topl_automaton* a,
                                            char** out);
TOPL_API topl_status topl_automaton_info_get(const topl_automaton* a,
                                             topl_automaton_info* out);
TOPL_API void topl_automaton_free(topl_automaton* a);

/* Writes a JSON array of diagnostics; TOPL_OK iff the array is empty. */
TOPL_API topl_status topl_validate(const topl_automaton* a, char** out);

TOPL_API topl_status topl_translate(const topl_automaton* a,
                                    topl_target target, topl_automaton** out);
TOPL_API topl_status topl_closure(const topl_automaton* a,
                                  const topl_automaton* b, topl_closure_op op,
                                  topl_automaton** out);

/* witness_json receives a JSON word, or NULL when the language is empty. */
TOPL_API topl_status topl_emptiness(const topl_automaton* a, int* is_empty,
                                    char** witness_json);
TOPL_API topl_status topl_member(const topl_automaton* a,
                                 const char* word_json, int* accepted);

TOPL_API topl_status topl_monitor_new(const topl_automaton* a,
                                      const topl_monitor_options* options,
                                      topl_monitor** out);
/* Feeds one JSON Lines trace record; verdicts_json receives a JSON array. */
TOPL_API topl_status topl_monitor_feed_event(topl_monitor* m,
                                             const char* event_json,
                                             char** verdicts_json);
/* Feeds one already encoded letter given as a JSON array of values. */
TOPL_API topl_status topl_monitor_feed_letter(topl_monitor* m,
                                              const char* letter_json,
                                              char** verdicts_json);
TOPL_API topl_status topl_monitor_finish(topl_monitor* m, char** report_json);
TOPL_API void topl_monitor_free(topl_monitor* m);

TOPL_API topl_status topl_run_trace_file(const topl_automaton* a,
                                         const char* path,
                                         const topl_monitor_options* options,
                                         int strict, char** report_json);

#ifdef __cplusplus
}
#endif

#endif  // TOPL_TOPL_H_
