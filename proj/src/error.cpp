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

#include "nslct/error.hpp"

namespace nslct {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SymplecticViolation: return "SymplecticViolation";
    case ErrorKind::SingularB: return "SingularB";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::CoverageError: return "CoverageError";
    case ErrorKind::ZeroSignal: return "ZeroSignal";
    case ErrorKind::BadAlpha: return "BadAlpha";
    case ErrorKind::BadP: return "BadP";
    case ErrorKind::BadBox: return "BadBox";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace nslct
