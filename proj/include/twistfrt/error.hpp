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

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistfrt {

enum class ErrorCode {
  DivisionByZero,
  PoleAtSubstitution,
  AlphabetMismatch,
  MissingGeneratorImage,
  CounitUndefinedForLetter,
  InvalidRule,
  DimMismatch,
  NotDiagonalizableQuadratic,
  NotInvolutive,
  CommutationFailure,
  ConfluenceFailure,
  AxiomFailure,
  InconsistentSystem,
  SyntaxError,
  SemanticError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// that the C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column, std::string expected)
      : Error(ErrorCode::SyntaxError, format(message, line, column, expected)),
        line_(line),
        column_(column),
        message_(std::move(message)),
        expected_(std::move(expected)) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  static std::string format(const std::string& message, int line, int column,
                            const std::string& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message;
    if (!expected.empty()) out += " (expected " + expected + ")";
    return out;
  }

  int line_;
  int column_;
  std::string message_;
  std::string expected_;
};

}  // namespace twistfrt
