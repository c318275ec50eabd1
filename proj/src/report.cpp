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

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "twistfrt/report.hpp"

namespace twistfrt {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warning: return "warning";
  }
  return "fail";
}

void CheckResult::fail(std::string location, std::string residual) {
  status = Status::Fail;
  ++failures;
  if (witnesses.size() < kMaxWitnesses) {
    witnesses.push_back({std::move(location), std::move(residual)});
  }
}

void CheckResult::warn(std::string note) {
  if (status == Status::Pass) status = Status::Warning;
  if (std::find(notes.begin(), notes.end(), note) == notes.end()) notes.push_back(std::move(note));
}

void CheckResult::expect_zero(const std::string& location, const ZeroTest& test) {
  expect_zero(location, test.residual.str(), test.zero, test.certified);
}

void CheckResult::expect_zero(const std::string& location, const std::string& residual, bool zero,
                              bool certified) {
  if (!zero) {
    fail(location, residual);
  } else if (!certified) {
    warn("ConfluenceNotEstablished: element degree exceeds the verified confluence degree");
  }
}

Status Report::overall() const {
  Status s = Status::Pass;
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return Status::Fail;
    if (c.status == Status::Warning) s = Status::Warning;
  }
  return s;
}

nlohmann::ordered_json Report::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["tool"] = tool;
  j["version"] = version;
  j["command"] = command;
  j["spec"] = spec_name;
  j["spec_hash"] = spec_hash;
  j["status"] = std::string(to_string(overall()));
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = std::string(to_string(c.status));
    auto& wj = cj["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : c.witnesses) {
      wj.push_back({{"location", w.location}, {"residual", w.residual}});
    }
    if (c.failures > c.witnesses.size()) cj["failures"] = c.failures;
    if (!c.notes.empty()) cj["notes"] = c.notes;
    if (!c.details.empty()) cj["details"] = c.details;
    if (include_timing) cj["timing_ms"] = c.timing_ms;
    arr.push_back(std::move(cj));
  }
  return j;
}

std::string Report::json(bool include_timing) const { return to_json(include_timing).dump(2) + "\n"; }

namespace {

void render_details(std::ostringstream& out, const nlohmann::ordered_json& value,
                    const std::string& indent) {
  for (auto it = value.begin(); it != value.end(); ++it) {
    const auto& v = it.value();
    if (v.is_array()) {
      out << indent << it.key() << ":\n";
      for (const auto& item : v) {
        out << indent << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    } else if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render_details(out, v, indent + "  ");
    } else {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
          << "\n";
    }
  }
}

}  // namespace

std::string Report::text() const {
  std::ostringstream out;
  out << tool << " " << version << "  " << command << "  [" << spec_name << "]\n";
  for (const auto& c : checks) {
    out << "  " << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "WARN")
        << "  " << c.name << "\n";
    for (const auto& w : c.witnesses) out << "        at " << w.location << ": " << w.residual << "\n";
    if (c.failures > c.witnesses.size()) {
      out << "        (" << c.failures - c.witnesses.size() << " more failures)\n";
    }
    for (const auto& n : c.notes) out << "        note: " << n << "\n";
    render_details(out, c.details, "        ");
  }
  out << "status: " << to_string(overall()) << "\n";
  return out.str();
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace twistfrt
