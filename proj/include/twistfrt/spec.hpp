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

// Algebra spec files: a sectioned plain-text description of the
// parameters, the quadratic form B, the twist and pipeline options.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "twistfrt/linalg.hpp"
#include "twistfrt/quadspace.hpp"
#include "twistfrt/twisted_frt.hpp"

namespace twistfrt {

enum class TwistKind { Flip, Table, Solve };

/// One `g(i,j,k) = expr` line. An index is either a number or a name; a
/// name matches every index, and repeated names force equal indices.
struct TwistEntry {
  std::array<std::string, 3> index;
  Scalar value;

  friend bool operator==(const TwistEntry&, const TwistEntry&) = default;
};

struct AlgebraSpec {
  std::string name = "<spec>";
  std::vector<std::string> params;
  int dim = 2;
  std::optional<ScalarMatrix> b;  // n²×n² in the pair basis
  bool complement = false;        // use the spectral complement of b
  TwistKind twist = TwistKind::Flip;
  std::vector<TwistEntry> twist_entries;
  std::vector<NCPoly> relations;  // direct presentation, overrides the derived ideal
  int max_degree = 4;
  std::vector<std::string> checks;  // empty: every check of the command
  bool localize = false;            // normal forms in the localized algebra
  std::map<std::string, mpq_class> bindings;  // parameter values already substituted

  ParamSet param_set() const { return ParamSet(params); }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Strict parse; SyntaxError with position, SemanticError for dimension
/// mismatches and unknown parameters.
AlgebraSpec parse_spec(std::string_view text, std::string name = "<spec>");
/// Text that parses back to an equal spec.
std::string render_spec(const AlgebraSpec& spec);

const std::vector<std::string>& preset_names();
/// Throws SemanticError for an unknown preset.
AlgebraSpec preset(std::string_view name);

/// Substitutes parameter values into every scalar of the spec and records
/// them as bindings. The substituted parameters stay declared.
AlgebraSpec specialize(const AlgebraSpec& spec, const std::map<std::string, mpq_class>& values);

/// B, with the spectral complement applied when requested. Throws
/// SemanticError when the spec has no B.
EndoTensor spec_b(const AlgebraSpec& spec);
/// The twist: flip, the g-table (unspecified entries 1) or the solved family.
TwistTensor spec_twist(const AlgebraSpec& spec);
/// Deformation (q, p) from the declared parameters; absent ones are 1.
Deformation spec_deformation(const AlgebraSpec& spec);

}  // namespace twistfrt
