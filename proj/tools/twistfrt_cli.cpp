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


// twistfrt command-line front end. Talks to the library through its C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistfrt/twistfrt.h"

namespace {

constexpr int kExitError = 2;

int fail(const std::string& message) {
  std::cerr << "twistfrt: " << message << "\n";
  return kExitError;
}

std::string joined(size_t (*count)(), const char* (*name)(size_t)) {
  std::string out;
  for (size_t i = 0; i < count(); ++i) out += (i ? ", " : "") + std::string(name(i));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted FRT bialgebra and Hopf algebra verifier", "twistfrt"};
  app.set_version_flag("--version", tfrt_version());

  std::string command;
  std::string expression;
  std::string spec_path;
  std::string preset;
  std::string json_path;
  int max_degree = 4;
  bool no_timing = false;
  bool list_presets = false;
  std::vector<std::string> params;

  app.add_option("command", command,
                 "One of: " + joined(tfrt_command_count, tfrt_command_name));
  app.add_option("expression", expression, "Expression for normal-form");
  auto* spec_opt = app.add_option("--spec", spec_path, "Algebra spec file")->check(CLI::ExistingFile);
  app.add_option("--preset", preset,
                 "Built-in spec: " + joined(tfrt_preset_count, tfrt_preset_name))
      ->excludes(spec_opt);
  app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
  app.add_option("--max-degree", max_degree, "Degree bound for confluence analysis")
      ->check(CLI::Range(2, 12));
  app.add_option("--param", params, "Specialize a parameter, name=rational (repeatable)");
  app.add_flag("--no-timing", no_timing, "Omit timing fields from the JSON report");
  app.add_flag("--list-presets", list_presets, "Print the built-in presets and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (list_presets) {
    for (size_t i = 0; i < tfrt_preset_count(); ++i) std::cout << tfrt_preset_name(i) << "\n";
    return 0;
  }
  if (command.empty()) return fail("missing command (see --help)");
  if (spec_path.empty() == preset.empty()) return fail("exactly one of --spec or --preset is required");

  tfrt_spec* spec = nullptr;
  tfrt_status st;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) return fail("cannot read " + spec_path);
    std::stringstream buf;
    buf << in.rdbuf();
    st = tfrt_spec_parse(buf.str().c_str(), spec_path.c_str(), &spec);
  } else {
    st = tfrt_spec_from_preset(preset.c_str(), &spec);
  }
  if (st != TFRT_OK) return fail(std::string(tfrt_status_name(st)) + ": " + tfrt_last_error());

  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) {
      tfrt_spec_free(spec);
      return fail("--param expects name=rational, got '" + p + "'");
    }
    st = tfrt_spec_set_param(spec, p.substr(0, eq).c_str(), p.substr(eq + 1).c_str());
    if (st != TFRT_OK) {
      tfrt_spec_free(spec);
      return fail(std::string(tfrt_status_name(st)) + ": " + tfrt_last_error());
    }
  }

  tfrt_report* report = nullptr;
  st = tfrt_run(spec, command.c_str(), expression.empty() ? nullptr : expression.c_str(),
                max_degree, &report);
  tfrt_spec_free(spec);
  if (st != TFRT_OK) return fail(std::string(tfrt_status_name(st)) + ": " + tfrt_last_error());

  const char* json = tfrt_report_json(report, no_timing ? 0 : 1);
  if (json_path == "-") {
    std::cout << json << "\n";
  } else {
    std::cout << tfrt_report_text(report);
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        tfrt_report_free(report);
        return fail("cannot write " + json_path);
      }
      out << json << "\n";
    }
  }
  const int code = tfrt_report_exit_code(report);
  tfrt_report_free(report);
  return code;
}
