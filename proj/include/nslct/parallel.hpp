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

#include <cstddef>
#include <functional>

namespace nslct {

/// Worker count: hardware concurrency, capped by the NSLCT_THREADS
/// environment variable when set. Always >= 1.
unsigned worker_count();

/// Calls body(chunk, begin, end) over a fixed partition of [0, count) into
/// `chunks` contiguous ranges. The partition depends only on count and
/// chunks, never on the worker count, so per-chunk results merged in chunk
/// order are reproducible.
void parallel_chunks(std::size_t count, std::size_t chunks,
                     const std::function<void(std::size_t chunk, std::size_t begin,
                                              std::size_t end)>& body);

/// Calls body(i) for every i in [0, count).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace nslct
