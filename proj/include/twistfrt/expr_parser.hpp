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

#include <string_view>

#include "twistfrt/freealg.hpp"
#include "twistfrt/scalar.hpp"

namespace twistfrt {

/// Where a fragment starts inside a larger document, for error positions.
struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Scalar grammar: integers, parameter names, + - * / ^ with integer
/// (possibly negative) exponents, parentheses. Throws ParseError on syntax
/// errors and Error(SemanticError) on unknown parameters.
Scalar parse_scalar(std::string_view text, const ParamSet& params, SourcePos origin = {});

/// Free-algebra expressions: the scalar grammar extended with letters of
/// `alphabet`. An identifier that is not a parameter is split greedily
/// into letters (longest match first), so "e1e2" and "ad" are products.
/// Letters do not commute; scalars commute with everything.
NCPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alphabet, const ParamSet& params,
                    SourcePos origin = {});

}  // namespace twistfrt
