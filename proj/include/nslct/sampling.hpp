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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "nslct/symplectic.hpp"

namespace nslct {

using Complex = std::complex<double>;

/// Uniform grid on R^n, n in {1, 2}. Sample k (per axis) sits at
/// origin + k * spacing; flat indices are row-major (last axis fastest).
class Grid {
 public:
  /// Throws DimensionError or BadParam (count not a power of two >= 8,
  /// spacing <= 0, non-finite origin).
  Grid(std::vector<std::size_t> counts, std::vector<double> spacing, std::vector<double> origin);

  /// Origin at -N_j * spacing_j / 2 on every axis, so x = 0 is a sample.
  static Grid centered(int n, std::size_t count, double spacing);
  static Grid centered(std::vector<std::size_t> counts, std::vector<double> spacing);

  int dim() const noexcept { return dim_; }
  std::size_t count(int axis) const { return counts_[axis]; }
  double spacing(int axis) const { return spacing_[axis]; }
  double origin(int axis) const { return origin_[axis]; }
  std::size_t size() const noexcept { return size_; }
  double cell_volume() const noexcept { return cell_volume_; }

  double coordinate(int axis, std::size_t k) const {
    return origin_[axis] + static_cast<double>(k) * spacing_[axis];
  }
  /// Per-axis indices of a flat index.
  std::array<std::size_t, 2> unravel(std::size_t flat) const;
  std::size_t ravel(std::array<std::size_t, 2> index) const;
  Vector point(std::size_t flat) const;

  /// Upper end of the sampled interval on one axis (origin + N * spacing).
  double extent_end(int axis) const { return coordinate(axis, counts_[axis]); }

  bool operator==(const Grid&) const = default;

 private:
  int dim_ = 0;
  std::array<std::size_t, 2> counts_{};
  std::array<double, 2> spacing_{};
  std::array<double, 2> origin_{};
  std::size_t size_ = 0;
  double cell_volume_ = 0.0;
};

/// The FFT frequency lattice of a signal grid, omega_j = 2 pi m / (N_j
/// spacing_j) with m in [-N_j/2, N_j/2), mapped through an n x n matrix:
/// points are w = map * omega. Flat index order is row-major over the
/// centred indices i_j = m + N_j/2.
class WarpedGrid {
 public:
  /// Throws BadParam when |det map| = 0 or the map order differs from the grid.
  WarpedGrid(Grid signal_grid, Matrix map);

  const Grid& signal_grid() const noexcept { return signal_grid_; }
  const Matrix& map() const noexcept { return map_; }
  int dim() const noexcept { return signal_grid_.dim(); }
  std::size_t size() const noexcept { return signal_grid_.size(); }

  /// Spacing of the unwarped lattice on one axis, 2 pi / (N spacing).
  double omega_step(int axis) const;
  Vector omega(std::size_t flat) const;
  Vector point(std::size_t flat) const { return map_ * omega(flat); }
  /// Flat index of the omega = 0 sample.
  std::size_t zero_index() const;
  /// |det map| * prod_j 2 pi / (N_j spacing_j).
  double cell_volume() const noexcept { return cell_volume_; }

  bool operator==(const WarpedGrid& other) const {
    return signal_grid_ == other.signal_grid_ && map_ == other.map_;
  }

 private:
  Grid signal_grid_;
  Matrix map_;
  double cell_volume_ = 0.0;
};

/// Complex samples on a grid; the role of both signals and windows.
struct SampledSignal {
  /// Throws BadParam on a length mismatch or non-finite sample.
  SampledSignal(Grid grid, std::vector<Complex> values);
  /// All-zero signal.
  explicit SampledSignal(Grid grid);

  Grid grid;
  std::vector<Complex> values;
};

/// Transform values on a warped frequency lattice.
struct Spectrum {
  Spectrum(WarpedGrid wgrid, std::vector<Complex> values);

  WarpedGrid wgrid;
  std::vector<Complex> values;
};

/// Short-time transform values over (shift u, frequency w). Shifts are every
/// stride-th signal sample per axis; values are u-major, one row of
/// wgrid.size() entries per shift.
struct Gram {
  Gram(WarpedGrid wgrid, std::size_t stride, std::vector<Complex> values);

  WarpedGrid wgrid;
  Grid ugrid;
  std::size_t stride;
  std::vector<Complex> values;

  std::size_t row_length() const noexcept { return wgrid.size(); }
  std::size_t rows() const noexcept { return ugrid.size(); }
  /// Signal-grid flat index of shift row `row`.
  std::size_t shift_signal_index(std::size_t row) const;
  /// du dw of one cell.
  double cell_volume() const noexcept { return wgrid.cell_volume() * ugrid.cell_volume(); }
};

/// The u-lattice for a stride: counts N_j / s, spacing s * spacing_j, same
/// origin. Throws BadParam when s is zero or does not divide every N_j.
Grid shift_grid(const Grid& signal_grid, std::size_t stride);

/// vol * sum_k f_k conj(g_k), summed sequentially. Throws GridMismatch.
Complex inner(const SampledSignal& f, const SampledSignal& g);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (vol * sum |v_k|^p)^(1/p), or max |v_k| for p = infinity. Throws BadP for
/// p < 1.
double lp_norm(const SampledSignal& f, double p);
double lp_norm(const Spectrum& s, double p);
double lp_norm(const Gram& g, double p);
double lp_norm(std::span<const Complex> values, double cell_volume, double p);

enum class SignalKind {
  Gaussian,     // unit discrete L2 norm, exp(-|x - c|^2 / (2 sigma^2))
  OddGaussian,  // (x_0 - c_0) times the Gaussian, unit norm
  Chirp,        // exp(i (freq sum x + rate |x|^2 / 2 + cubic sum x^3 / 3)) * envelope
  Noise,        // band-limited complex noise with a Gaussian taper
  Ones,         // constant 1
};

struct SynthParams {
  double sigma = 1.0;
  /// Centre per axis; empty means the origin.
  std::vector<double> center;
  double freq = 0.0;
  double rate = 0.0;
  double cubic = 0.0;
  /// Chirp envelope width; 0 means no envelope (pure chirp).
  double envelope = 0.0;
  /// Noise: kept fraction of the FFT band (0, 1] and the taper width.
  double band = 0.125;
  std::uint64_t seed = 0;
};

/// Deterministic test signals. Throws BadParam for non-positive widths or
/// band fractions outside (0, 1].
SampledSignal synthesize(SignalKind kind, const Grid& grid, const SynthParams& params = {});

}  // namespace nslct
