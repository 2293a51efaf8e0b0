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

#include "nslct/nslct.hpp"
#include "nslct/sampling.hpp"
#include "nslct/symplectic.hpp"

namespace nslct {

/// Window phi plus the shift stride. The window lives on the signal grid and
/// is indexed relative to x = 0, so phi(x_k - u) is an integer sample shift;
/// out-of-range window samples read as zero.
class WindowSpec {
 public:
  /// Throws BadParam for a zero window or stride 0, GridMismatch when x = 0
  /// is not a sample of the window grid.
  explicit WindowSpec(SampledSignal window, std::size_t stride = 1);

  const SampledSignal& window() const noexcept { return window_; }
  std::size_t stride() const noexcept { return stride_; }
  /// ||phi||_2^2.
  double norm2() const noexcept { return norm2_; }

  /// phi(x_k - x_l) for signal-grid flat indices k and l; zero outside the
  /// window's grid.
  Complex shifted(std::size_t k, std::size_t l) const;

 private:
  SampledSignal window_;
  std::size_t stride_;
  double norm2_;
  std::array<std::ptrdiff_t, 2> zero_offset_{};  // window index of x = 0
};

/// V(w, u) = L_M[f conj(phi(. - u))](w) for every u on the stride lattice,
/// each row by the fast path. Throws GridMismatch when f and phi differ in
/// grid geometry.
Gram stnslct_gram(const SampledSignal& f, const WindowSpec& wspec, const FreeSymplecticMatrix& m);

/// bound - sup |V| with bound = (2 pi)^{-n/2} |det B|^{-1/2} ||f|| ||phi||.
double boundedness_margin(const Gram& gram, const SampledSignal& f, const WindowSpec& wspec,
                          const FreeSymplecticMatrix& m);

enum class ReconstructionMode {
  /// Divide by sum_u |phi(x - u)|^2 du at each x. Exact on the lattice.
  PartitionOfUnity,
  /// Divide by the constant ||phi||^2 (the continuum formula).
  ConstantNorm,
};

/// f(x) = (1/den) sum_u sum_w V(w, u) phi(x - u) conj(K(x, w)) dw du.
/// Throws CoverageError when sum_u |phi(x - u)|^2 du < 1e-9 at some x.
SampledSignal stnslct_reconstruct(const Gram& gram, const WindowSpec& wspec,
                                  const FreeSymplecticMatrix& m,
                                  ReconstructionMode mode = ReconstructionMode::PartitionOfUnity);

/// <V1, V2> = sum V1 conj(V2) dw du. Throws GridMismatch unless both grams
/// share their lattices.
Complex moyal(const Gram& g1, const Gram& g2);

}  // namespace nslct
