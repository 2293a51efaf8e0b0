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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nslct/uncertainty.hpp"

namespace nslct::cli {

/// Suite names accepted by run_suite, "all" first.
std::span<const std::string_view> suite_names();
bool is_suite_name(std::string_view name);

struct SuiteRow {
  std::string family;
  std::size_t instance = 0;
  UPReport report;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteRow> rows;

  bool passed() const;
  std::vector<std::string> families() const;
};

/// Number of seeded signal/window/matrix instances per run.
inline constexpr std::size_t kSuiteInstances = 24;

/// Runs one family (or "all") over kSuiteInstances seeded instances. Each
/// instance draws its own signal, Gaussian window and matrix from the seed,
/// so the result is a pure function of (suite, seed). Throws BadParam for an
/// unknown suite.
SuiteResult run_suite(std::string_view suite, std::uint64_t seed);

/// CSV: family,name,instance,inputs,lhs,rhs,constant,margin,pass.
std::string format_report(const SuiteResult& result);

/// One line per family: passes, count and the smallest lhs/rhs ratio.
std::string summarize(const SuiteResult& result);

}  // namespace nslct::cli
