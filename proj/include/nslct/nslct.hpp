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

#include <span>
#include <vector>

#include "nslct/fft.hpp"
#include "nslct/sampling.hpp"
#include "nslct/symplectic.hpp"

namespace nslct {

/// Unimodular quadratic phase sampled on a lattice.
class ChirpField {
 public:
  /// exp(i x^T B^{-1} A x / 2) at every signal-grid point.
  static ChirpField spatial(const Grid& grid, const FreeSymplecticMatrix& m);
  /// exp(i w^T D B^{-1} w / 2) at every warped-lattice point.
  static ChirpField spectral(const WarpedGrid& wgrid, const FreeSymplecticMatrix& m);

  std::span<const Complex> values() const noexcept { return values_; }

 private:
  explicit ChirpField(std::vector<Complex> values) : values_(std::move(values)) {}
  std::vector<Complex> values_;
};

/// (2 pi)^{-n/2} |det B|^{-1/2} exp(i/2 (w^T D B^{-1} w - 2 w^T B^{-T} x + x^T B^{-1} A x)).
Complex kernel_eval(const FreeSymplecticMatrix& m, const Vector& x, const Vector& w);

/// Brute-force quadrature vol * sum_k f_k K(x_k, w) at arbitrary points.
/// O(|points| * |grid|); used as the reference for the fast path.
std::vector<Complex> nslct_direct(const SampledSignal& f, const FreeSymplecticMatrix& m,
                                  std::span<const Vector> wpoints);

/// Chirp, FFT, chirp. Output lives on the B-warped FFT lattice of f's grid.
/// Reusable across signals on the same grid; forward() and inverse() are
/// const and safe to call concurrently.
class NslctPlan {
 public:
  NslctPlan(const Grid& grid, const FreeSymplecticMatrix& m);

  const Grid& grid() const noexcept { return wgrid_.signal_grid(); }
  const WarpedGrid& wgrid() const noexcept { return wgrid_; }
  const FreeSymplecticMatrix& matrix() const noexcept { return matrix_; }

  void forward(std::span<const Complex> signal, std::span<Complex> spectrum) const;
  /// Exact inverse of forward() on the discrete lattice.
  void inverse(std::span<const Complex> spectrum, std::span<Complex> signal) const;

 private:
  FreeSymplecticMatrix matrix_;
  WarpedGrid wgrid_;
  std::vector<std::size_t> bin_of_;  // centred output index -> FFT bin
  std::vector<Complex> in_chirp_;    // exp(i x^T B^{-1} A x / 2)
  std::vector<Complex> out_factor_;  // scale * exp(i (w^T D B^{-1} w / 2 - omega . origin))
  FftPlan forward_fft_;
  FftPlan backward_fft_;
};

Spectrum nslct_fast(const SampledSignal& f, const FreeSymplecticMatrix& m);

/// f(x_k) = sum_m F_m conj(K(x_k, w_m)) dw, computed by undoing the fast
/// path. Throws GridMismatch when the spectrum's warp is not B.
SampledSignal nslct_inverse(const Spectrum& spectrum, const FreeSymplecticMatrix& m);

/// Reinterprets a spectrum on a diagonal warp as a signal on the uniform grid
/// its lattice points form (axes with a negative warp are reversed). Throws
/// GridMismatch when the warp is not diagonal.
SampledSignal spectrum_as_signal(const Spectrum& spectrum);

}  // namespace nslct
