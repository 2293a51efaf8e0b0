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

#include <stdexcept>
#include <string>
#include <string_view>

namespace nslct {

enum class ErrorKind {
  SymplecticViolation,
  SingularB,
  DimensionError,
  GridMismatch,
  BadParam,
  CoverageError,
  ZeroSignal,
  BadAlpha,
  BadP,
  BadBox,
  DomainError,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. what() starts with the variant name, e.g.
/// "SingularB: |det B| = 0 <= 1e-12".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nslct
