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

#include "nslct/nslct.hpp"

#include <cmath>
#include <numbers>

#include "nslct/error.hpp"
#include "nslct/parallel.hpp"

namespace nslct {

namespace {

std::vector<std::size_t> dims_of(const Grid& g) {
  std::vector<std::size_t> dims;
  for (int j = 0; j < g.dim(); ++j) dims.push_back(g.count(j));
  return dims;
}

double normalization(const FreeSymplecticMatrix& m) {
  return std::pow(2.0 * std::numbers::pi, -0.5 * m.dim()) / std::sqrt(std::abs(m.det_b()));
}

void check_dim(const Grid& g, const FreeSymplecticMatrix& m) {
  if (g.dim() != m.dim()) {
    throw Error(ErrorKind::DimensionError, "signal and matrix dimensions differ");
  }
}

}  // namespace

ChirpField ChirpField::spatial(const Grid& grid, const FreeSymplecticMatrix& m) {
  check_dim(grid, m);
  std::vector<Complex> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Vector x = grid.point(k);
    v[k] = std::polar(1.0, 0.5 * x.dot(m.b_inv_a() * x));
  }
  return ChirpField(std::move(v));
}

ChirpField ChirpField::spectral(const WarpedGrid& wgrid, const FreeSymplecticMatrix& m) {
  if (wgrid.dim() != m.dim()) {
    throw Error(ErrorKind::DimensionError, "lattice and matrix dimensions differ");
  }
  std::vector<Complex> v(wgrid.size());
  for (std::size_t k = 0; k < wgrid.size(); ++k) {
    const Vector w = wgrid.point(k);
    v[k] = std::polar(1.0, 0.5 * w.dot(m.d_b_inv() * w));
  }
  return ChirpField(std::move(v));
}

Complex kernel_eval(const FreeSymplecticMatrix& m, const Vector& x, const Vector& w) {
  const double phase =
      0.5 * (w.dot(m.d_b_inv() * w) - 2.0 * w.dot(m.b_inv_t() * x) + x.dot(m.b_inv_a() * x));
  return std::polar(normalization(m), phase);
}

std::vector<Complex> nslct_direct(const SampledSignal& f, const FreeSymplecticMatrix& m,
                                  std::span<const Vector> wpoints) {
  check_dim(f.grid, m);
  std::vector<Vector> xs(f.grid.size());
  for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = f.grid.point(k);

  std::vector<Complex> out(wpoints.size());
  const double vol = f.grid.cell_volume();
  parallel_for(wpoints.size(), [&](std::size_t i) {
    const Vector& w = wpoints[i];
    if (w.size() != m.dim()) throw Error(ErrorKind::DimensionError, "output point has wrong dimension");
    Complex sum{0.0, 0.0};
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (f.values[k] == Complex{}) continue;
      sum += f.values[k] * kernel_eval(m, xs[k], w);
    }
    out[i] = vol * sum;
  });
  return out;
}

NslctPlan::NslctPlan(const Grid& grid, const FreeSymplecticMatrix& m)
    : matrix_(m),
      wgrid_(grid, m.b()),
      forward_fft_(dims_of(grid), FftPlan::Direction::Forward),
      backward_fft_(dims_of(grid), FftPlan::Direction::Backward) {
  check_dim(grid, m);
  const std::size_t size = grid.size();

  bin_of_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    auto idx = grid.unravel(i);
    for (int j = 0; j < grid.dim(); ++j) idx[j] = (idx[j] + grid.count(j) / 2) % grid.count(j);
    bin_of_[i] = grid.ravel(idx);
  }

  const ChirpField chirp = ChirpField::spatial(grid, m);
  in_chirp_.assign(chirp.values().begin(), chirp.values().end());

  // Sampling the continuous FT: F(omega) = (2 pi)^{-n/2} vol exp(-i omega.o) DFT.
  const double scale = normalization(m) * grid.cell_volume();
  Vector origin(grid.dim());
  for (int j = 0; j < grid.dim(); ++j) origin(j) = grid.origin(j);
  out_factor_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Vector om = wgrid_.omega(i);
    const Vector w = m.b() * om;
    out_factor_[i] = std::polar(scale, 0.5 * w.dot(m.d_b_inv() * w) - om.dot(origin));
  }
}

void NslctPlan::forward(std::span<const Complex> signal, std::span<Complex> spectrum) const {
  const std::size_t size = in_chirp_.size();
  if (signal.size() != size || spectrum.size() != size) {
    throw Error(ErrorKind::GridMismatch, "buffer length differs from the plan's grid");
  }
  std::vector<Complex> work(size), bins(size);
  for (std::size_t k = 0; k < size; ++k) work[k] = signal[k] * in_chirp_[k];
  forward_fft_.execute(work, bins);
  for (std::size_t i = 0; i < size; ++i) spectrum[i] = out_factor_[i] * bins[bin_of_[i]];
}

void NslctPlan::inverse(std::span<const Complex> spectrum, std::span<Complex> signal) const {
  const std::size_t size = in_chirp_.size();
  if (signal.size() != size || spectrum.size() != size) {
    throw Error(ErrorKind::GridMismatch, "buffer length differs from the plan's grid");
  }
  std::vector<Complex> bins(size), work(size);
  for (std::size_t i = 0; i < size; ++i) bins[bin_of_[i]] = spectrum[i] / out_factor_[i];
  backward_fft_.execute(bins, work);
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t k = 0; k < size; ++k) signal[k] = scale * work[k] * std::conj(in_chirp_[k]);
}

Spectrum nslct_fast(const SampledSignal& f, const FreeSymplecticMatrix& m) {
  const NslctPlan plan(f.grid, m);
  std::vector<Complex> out(f.grid.size());
  plan.forward(f.values, out);
  return Spectrum(plan.wgrid(), std::move(out));
}

SampledSignal nslct_inverse(const Spectrum& spectrum, const FreeSymplecticMatrix& m) {
  const Matrix& warp = spectrum.wgrid.map();
  if (warp.rows() != m.dim() || max_abs(warp - m.b()) > 1e-12 * std::max(1.0, max_abs(m.b()))) {
    throw Error(ErrorKind::GridMismatch, "spectrum lattice is not warped by this matrix's B");
  }
  const NslctPlan plan(spectrum.wgrid.signal_grid(), m);
  SampledSignal out(spectrum.wgrid.signal_grid());
  plan.inverse(spectrum.values, out.values);
  return out;
}

SampledSignal spectrum_as_signal(const Spectrum& spectrum) {
  const WarpedGrid& wg = spectrum.wgrid;
  const Matrix& warp = wg.map();
  const int n = wg.dim();
  if (n == 2 && (warp(0, 1) != 0.0 || warp(1, 0) != 0.0)) {
    throw Error(ErrorKind::GridMismatch, "only diagonal warps form a uniform grid");
  }
  const Grid& sg = wg.signal_grid();
  std::vector<std::size_t> counts;
  std::vector<double> spacing, origin;
  std::array<bool, 2> reversed{false, false};
  const Vector first = wg.omega(0);
  for (int j = 0; j < n; ++j) {
    const double b = warp(j, j);
    const double step = b * wg.omega_step(j);
    const double start = b * first(j);
    const double last = start + step * static_cast<double>(sg.count(j) - 1);
    counts.push_back(sg.count(j));
    spacing.push_back(std::abs(step));
    origin.push_back(std::min(start, last));
    reversed[j] = b < 0.0;
  }
  Grid grid(counts, spacing, origin);
  std::vector<Complex> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto idx = grid.unravel(i);
    for (int j = 0; j < n; ++j) {
      if (reversed[j]) idx[j] = grid.count(j) - 1 - idx[j];
    }
    values[i] = spectrum.values[sg.ravel(idx)];
  }
  return SampledSignal(std::move(grid), std::move(values));
}

}  // namespace nslct
