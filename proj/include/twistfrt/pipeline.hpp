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

// Named pipelines over an algebra spec, each producing a Report.

#include <string>
#include <string_view>
#include <vector>

#include "twistfrt/report.hpp"
#include "twistfrt/spec.hpp"

namespace twistfrt {

inline constexpr std::string_view kVersion = "0.1.0";

struct PipelineOptions {
  int max_degree = 0;    // 0: use the spec's max_degree
  std::string argument;  // expression for normal-form
};

/// check-yb, derive-bialgebra, check-bialgebra, solve-twist, check-hopf,
/// normal-form, confluence.
const std::vector<std::string>& pipeline_commands();

/// Algebraic failures inside a check become failed checks with the error as
/// witness; SyntaxError, SemanticError and InvalidArgument propagate.
Report run_pipeline(const AlgebraSpec& spec, std::string_view command,
                    const PipelineOptions& options = {});

}  // namespace twistfrt
