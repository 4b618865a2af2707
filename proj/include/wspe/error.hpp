// Copyright 2026 The wspe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WSPE_ERROR_HPP
#define WSPE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wspe {

enum class ErrorCode {
    DanglingEdge,
    SinkVertex,
    LeafWithExtraEdge,
    MissingLeafOutcome,
    NonPermutationPreference,
    KindMismatch,
    UndefinedOutcome,
    UnreachableLeaf,
    NoCycle,
    OutcomeMismatch,
    TooManyProfiles,
    NotATree,
    ProfileIncomplete,
    SemanticError,
};

const char *error_code_name(ErrorCode code);

/// Validation and evaluation errors raised by the library.
class GameError : public std::runtime_error {
public:
    GameError(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Game-file parse error with source position.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(int line, int col, const std::string &expected)
        : std::runtime_error("syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": expected " + expected),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Raised by the fixpoint engine when a runtime invariant check fails.
/// Signals an implementation bug, never expected on valid inputs.
class InvariantViolation : public std::logic_error {
public:
    InvariantViolation(int step, int which, const std::string &detail)
        : std::logic_error("invariant INV" + std::to_string(which) + " violated at step " +
                           std::to_string(step) + ": " + detail),
          step_(step), which_(which) {}

    int step() const { return step_; }
    int which() const { return which_; }

private:
    int step_;
    int which_;
};

} // namespace wspe

#endif
