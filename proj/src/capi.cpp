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


#include "twistfrt/twistfrt.h"

#include <gmpxx.h>

#include <new>
#include <string>

#include "twistfrt/pipeline.hpp"
#include "twistfrt/spec.hpp"

struct tfrt_spec {
  twistfrt::AlgebraSpec spec;
  std::string rendered;
};

struct tfrt_report {
  twistfrt::Report report;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

tfrt_status status_of(twistfrt::ErrorCode code) {
  using twistfrt::ErrorCode;
  switch (code) {
    case ErrorCode::DivisionByZero: return TFRT_ERR_DIVISION_BY_ZERO;
    case ErrorCode::PoleAtSubstitution: return TFRT_ERR_POLE_AT_SUBSTITUTION;
    case ErrorCode::AlphabetMismatch: return TFRT_ERR_ALPHABET_MISMATCH;
    case ErrorCode::MissingGeneratorImage: return TFRT_ERR_MISSING_GENERATOR_IMAGE;
    case ErrorCode::CounitUndefinedForLetter: return TFRT_ERR_COUNIT_UNDEFINED;
    case ErrorCode::InvalidRule: return TFRT_ERR_INVALID_RULE;
    case ErrorCode::DimMismatch: return TFRT_ERR_DIM_MISMATCH;
    case ErrorCode::NotDiagonalizableQuadratic: return TFRT_ERR_NOT_DIAGONALIZABLE_QUADRATIC;
    case ErrorCode::NotInvolutive: return TFRT_ERR_NOT_INVOLUTIVE;
    case ErrorCode::CommutationFailure: return TFRT_ERR_COMMUTATION_FAILURE;
    case ErrorCode::ConfluenceFailure: return TFRT_ERR_CONFLUENCE_FAILURE;
    case ErrorCode::AxiomFailure: return TFRT_ERR_AXIOM_FAILURE;
    case ErrorCode::InconsistentSystem: return TFRT_ERR_INCONSISTENT_SYSTEM;
    case ErrorCode::SyntaxError: return TFRT_ERR_SYNTAX;
    case ErrorCode::SemanticError: return TFRT_ERR_SEMANTIC;
    case ErrorCode::InvalidArgument: return TFRT_ERR_INVALID_ARGUMENT;
  }
  return TFRT_ERR_INTERNAL;
}

template <typename F>
tfrt_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return TFRT_OK;
  } catch (const twistfrt::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  }
  return TFRT_ERR_INTERNAL;
}

tfrt_status null_argument(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return TFRT_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* tfrt_version(void) { return twistfrt::kVersion.data(); }

const char* tfrt_status_name(tfrt_status status) {
  switch (status) {
    case TFRT_OK: return "ok";
    case TFRT_ERR_INTERNAL: return "InternalError";
    default: break;
  }
  if (status > TFRT_OK && status < TFRT_ERR_INTERNAL) {
    return twistfrt::to_string(static_cast<twistfrt::ErrorCode>(status - 1)).data();
  }
  return "unknown";
}

const char* tfrt_last_error(void) { return g_last_error.c_str(); }

size_t tfrt_preset_count(void) { return twistfrt::preset_names().size(); }

const char* tfrt_preset_name(size_t index) {
  const auto& names = twistfrt::preset_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

size_t tfrt_command_count(void) { return twistfrt::pipeline_commands().size(); }

const char* tfrt_command_name(size_t index) {
  const auto& names = twistfrt::pipeline_commands();
  return index < names.size() ? names[index].c_str() : nullptr;
}

tfrt_status tfrt_spec_parse(const char* text, const char* name, tfrt_spec** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new tfrt_spec{twistfrt::parse_spec(text, name ? name : "<spec>"), {}};
  });
}

tfrt_status tfrt_spec_from_preset(const char* preset, tfrt_spec** out) {
  if (!preset) return null_argument("preset");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new tfrt_spec{twistfrt::preset(preset), {}}; });
}

tfrt_status tfrt_spec_set_param(tfrt_spec* spec, const char* name, const char* rational) {
  if (!spec) return null_argument("spec");
  if (!name) return null_argument("name");
  if (!rational) return null_argument("rational");
  return guarded([&] {
    mpq_class value;
    if (value.set_str(rational, 10) != 0) {
      throw twistfrt::Error(twistfrt::ErrorCode::InvalidArgument,
                            std::string("not a rational number: '") + rational + "'");
    }
    value.canonicalize();
    spec->spec = twistfrt::specialize(spec->spec, {{name, value}});
  });
}

const char* tfrt_spec_render(tfrt_spec* spec) {
  if (!spec) return nullptr;
  spec->rendered = twistfrt::render_spec(spec->spec);
  return spec->rendered.c_str();
}

void tfrt_spec_free(tfrt_spec* spec) { delete spec; }

tfrt_status tfrt_run(const tfrt_spec* spec, const char* command, const char* argument,
                     int max_degree, tfrt_report** out) {
  if (!spec) return null_argument("spec");
  if (!command) return null_argument("command");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    twistfrt::PipelineOptions options;
    options.max_degree = max_degree > 0 ? max_degree : 0;
    if (argument) options.argument = argument;
    *out = new tfrt_report{twistfrt::run_pipeline(spec->spec, command, options), {}, {}};
  });
}

const char* tfrt_report_json(tfrt_report* report, int include_timing) {
  if (!report) return nullptr;
  report->json = report->report.json(include_timing != 0);
  return report->json.c_str();
}

const char* tfrt_report_text(tfrt_report* report) {
  if (!report) return nullptr;
  report->text = report->report.text();
  return report->text.c_str();
}

int tfrt_report_exit_code(const tfrt_report* report) {
  return report ? report->report.exit_code() : 1;
}

void tfrt_report_free(tfrt_report* report) { delete report; }

}  // extern "C"
