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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nslct {

/// Unnormalized multi-dimensional DFT over row-major data.
///   forward:  X_j = sum_k x_k exp(-2 pi i j.k / N)
///   backward: x_k = sum_j X_j exp(+2 pi i j.k / N)
/// Plans are cached process-wide; execute() is safe to call concurrently.
class FftPlan {
 public:
  enum class Direction { Forward, Backward };

  FftPlan(std::span<const std::size_t> dims, Direction direction);

  std::size_t size() const noexcept { return size_; }

  /// `in` and `out` must not alias and must both hold size() elements.
  void execute(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;

 private:
  void* plan_ = nullptr;  // fftw_plan, owned by the process-wide cache
  std::size_t size_ = 0;
};

}  // namespace nslct
