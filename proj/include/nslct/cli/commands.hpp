// Copyright 2026 The nslct Authors.
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

#include <ostream>
#include <span>
#include <string>

#include "nslct/error.hpp"

namespace nslct::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,       // bad flags, unreadable or malformed files, ParseError, BadParam
  kExitValidation = 3,  // SymplecticViolation, SingularB, DimensionError, GridMismatch
  kExitNumeric = 4,     // CoverageError, ZeroSignal, BadAlpha, BadP, BadBox, DomainError
};

int exit_code(ErrorKind kind);

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out`; diagnostics, which name the error variant, go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nslct::cli
