// Copyright 2026 The twistfrt Authors
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


/* C interface to the twistfrt verification library. All functions are
 * thread-compatible; distinct handles may be used from different threads.
 * Strings returned as `const char*` are owned by the handle they came from
 * unless stated otherwise. */

#ifndef TWISTFRT_H
#define TWISTFRT_H

#include <stddef.h>

#if defined(TWISTFRT_BUILDING_LIBRARY)
#define TWISTFRT_API __attribute__((visibility("default")))
#else
#define TWISTFRT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tfrt_status {
  TFRT_OK = 0,
  TFRT_ERR_DIVISION_BY_ZERO,
  TFRT_ERR_POLE_AT_SUBSTITUTION,
  TFRT_ERR_ALPHABET_MISMATCH,
  TFRT_ERR_MISSING_GENERATOR_IMAGE,
  TFRT_ERR_COUNIT_UNDEFINED,
  TFRT_ERR_INVALID_RULE,
  TFRT_ERR_DIM_MISMATCH,
  TFRT_ERR_NOT_DIAGONALIZABLE_QUADRATIC,
  TFRT_ERR_NOT_INVOLUTIVE,
  TFRT_ERR_COMMUTATION_FAILURE,
  TFRT_ERR_CONFLUENCE_FAILURE,
  TFRT_ERR_AXIOM_FAILURE,
  TFRT_ERR_INCONSISTENT_SYSTEM,
  TFRT_ERR_SYNTAX,
  TFRT_ERR_SEMANTIC,
  TFRT_ERR_INVALID_ARGUMENT,
  TFRT_ERR_INTERNAL
} tfrt_status;

typedef struct tfrt_spec tfrt_spec;
typedef struct tfrt_report tfrt_report;

TWISTFRT_API const char* tfrt_version(void);
TWISTFRT_API const char* tfrt_status_name(tfrt_status status);
/* Message of the last failed call on this thread; empty when none. */
TWISTFRT_API const char* tfrt_last_error(void);

TWISTFRT_API size_t tfrt_preset_count(void);
TWISTFRT_API const char* tfrt_preset_name(size_t index);
TWISTFRT_API size_t tfrt_command_count(void);
TWISTFRT_API const char* tfrt_command_name(size_t index);

/* `name` labels the spec in reports and may be NULL. */
TWISTFRT_API tfrt_status tfrt_spec_parse(const char* text, const char* name, tfrt_spec** out);
TWISTFRT_API tfrt_status tfrt_spec_from_preset(const char* preset, tfrt_spec** out);
/* Specializes a declared parameter to a rational such as "1" or "-3/2". */
TWISTFRT_API tfrt_status tfrt_spec_set_param(tfrt_spec* spec, const char* name,
                                              const char* rational);
/* Canonical text of the spec; valid until the next call on `spec`. */
TWISTFRT_API const char* tfrt_spec_render(tfrt_spec* spec);
TWISTFRT_API void tfrt_spec_free(tfrt_spec* spec);

/* Runs a pipeline command. `argument` is the expression for normal-form
 * (NULL otherwise); max_degree <= 0 uses the spec's value. */
TWISTFRT_API tfrt_status tfrt_run(const tfrt_spec* spec, const char* command,
                                  const char* argument, int max_degree, tfrt_report** out);
TWISTFRT_API const char* tfrt_report_json(tfrt_report* report, int include_timing);
TWISTFRT_API const char* tfrt_report_text(tfrt_report* report);
/* 0 when no check failed, 1 otherwise. */
TWISTFRT_API int tfrt_report_exit_code(const tfrt_report* report);
TWISTFRT_API void tfrt_report_free(tfrt_report* report);

#ifdef __cplusplus
}
#endif

#endif
