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

#pragma once

// Check results and the versioned JSON report.

#include <string>
#include <vector>

#include "json.hpp"
#include "twistfrt/rewrite.hpp"

namespace twistfrt {

enum class Status { Pass, Fail, Warning };

std::string_view to_string(Status s) noexcept;

struct Witness {
  std::string location;  // failing index tuple or element
  std::string residual;  // reduced residual in canonical text
};

struct CheckResult {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string name;
  Status status = Status::Pass;
  std::vector<Witness> witnesses;
  std::size_t failures = 0;
  std::vector<std::string> notes;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double timing_ms = 0.0;

  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  bool passed() const noexcept { return status != Status::Fail; }

  void fail(std::string location, std::string residual);
  void warn(std::string note);
  /// Records a zero test: fail with witness when nonzero, warning when the
  /// rewrite system's confluence does not cover the element's degree.
  void expect_zero(const std::string& location, const ZeroTest& test);
  /// Tensor variant; `certified` as for ZeroTest.
  void expect_zero(const std::string& location, const std::string& residual, bool zero,
                   bool certified);
};

struct Report {
  static constexpr int kSchema = 1;

  std::string tool = "twistfrt";
  std::string version;
  std::string command;
  std::string spec_name;
  std::string spec_hash;
  std::vector<CheckResult> checks;

  /// Fail if any check failed, else warning if any warned, else pass.
  Status overall() const;
  int exit_code() const { return overall() == Status::Fail ? 1 : 0; }

  nlohmann::ordered_json to_json(bool include_timing = true) const;
  std::string json(bool include_timing = true) const;
  std::string text() const;
};

/// 64-bit FNV-1a of `text` as 16 hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace twistfrt
