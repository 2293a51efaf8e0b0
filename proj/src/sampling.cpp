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

#include "nslct/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "nslct/error.hpp"
#include "nslct/fft.hpp"

namespace nslct {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

void check_finite(std::span<const Complex> values) {
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::BadParam, "non-finite sample value");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid

Grid::Grid(std::vector<std::size_t> counts, std::vector<double> spacing,
           std::vector<double> origin) {
  const auto n = counts.size();
  if (n < 1 || n > 2) {
    throw Error(ErrorKind::DimensionError, "grid dimension must be 1 or 2");
  }
  if (spacing.size() != n || origin.size() != n) {
    throw Error(ErrorKind::DimensionError, "grid counts, spacing and origin differ in length");
  }
  dim_ = static_cast<int>(n);
  size_ = 1;
  cell_volume_ = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (counts[j] < 8 || !is_power_of_two(counts[j])) {
      throw Error(ErrorKind::BadParam,
                  "grid count must be a power of two >= 8, got " + std::to_string(counts[j]));
    }
    if (!(spacing[j] > 0.0) || !std::isfinite(spacing[j])) {
      throw Error(ErrorKind::BadParam, "grid spacing must be positive and finite");
    }
    if (!std::isfinite(origin[j])) throw Error(ErrorKind::BadParam, "grid origin must be finite");
    counts_[j] = counts[j];
    spacing_[j] = spacing[j];
    origin_[j] = origin[j];
    size_ *= counts[j];
    cell_volume_ *= spacing[j];
  }
}

Grid Grid::centered(int n, std::size_t count, double spacing) {
  if (n < 1 || n > 2) throw Error(ErrorKind::DimensionError, "grid dimension must be 1 or 2");
  const auto len = static_cast<std::size_t>(n);
  return centered(std::vector<std::size_t>(len, count), std::vector<double>(len, spacing));
}

Grid Grid::centered(std::vector<std::size_t> counts, std::vector<double> spacing) {
  std::vector<double> origin(counts.size());
  for (std::size_t j = 0; j < counts.size() && j < spacing.size(); ++j) {
    origin[j] = -0.5 * static_cast<double>(counts[j]) * spacing[j];
  }
  return Grid(std::move(counts), std::move(spacing), std::move(origin));
}

std::array<std::size_t, 2> Grid::unravel(std::size_t flat) const {
  if (dim_ == 1) return {flat, 0};
  return {flat / counts_[1], flat % counts_[1]};
}

std::size_t Grid::ravel(std::array<std::size_t, 2> index) const {
  return dim_ == 1 ? index[0] : index[0] * counts_[1] + index[1];
}

Vector Grid::point(std::size_t flat) const {
  const auto idx = unravel(flat);
  Vector x(dim_);
  for (int j = 0; j < dim_; ++j) x(j) = coordinate(j, idx[j]);
  return x;
}

// ---------------------------------------------------------------------------
// WarpedGrid

WarpedGrid::WarpedGrid(Grid signal_grid, Matrix map)
    : signal_grid_(std::move(signal_grid)), map_(std::move(map)) {
  const int n = signal_grid_.dim();
  if (map_.rows() != n || map_.cols() != n) {
    throw Error(ErrorKind::DimensionError, "warp matrix order differs from grid dimension");
  }
  const double det = map_.determinant();
  if (!(std::abs(det) > 0.0) || !std::isfinite(det)) {
    throw Error(ErrorKind::BadParam, "warp matrix must be invertible");
  }
  cell_volume_ = std::abs(det);
  for (int j = 0; j < n; ++j) cell_volume_ *= omega_step(j);
}

double WarpedGrid::omega_step(int axis) const {
  return 2.0 * std::numbers::pi /
         (static_cast<double>(signal_grid_.count(axis)) * signal_grid_.spacing(axis));
}

Vector WarpedGrid::omega(std::size_t flat) const {
  const auto idx = signal_grid_.unravel(flat);
  Vector om(dim());
  for (int j = 0; j < dim(); ++j) {
    const auto half = static_cast<std::ptrdiff_t>(signal_grid_.count(j) / 2);
    const auto m = static_cast<std::ptrdiff_t>(idx[j]) - half;
    om(j) = 2.0 * std::numbers::pi * static_cast<double>(m) /
            (static_cast<double>(signal_grid_.count(j)) * signal_grid_.spacing(j));
  }
  return om;
}

std::size_t WarpedGrid::zero_index() const {
  return signal_grid_.ravel({signal_grid_.count(0) / 2,
                             dim() > 1 ? signal_grid_.count(1) / 2 : std::size_t{0}});
}

// ---------------------------------------------------------------------------
// Containers

SampledSignal::SampledSignal(Grid g, std::vector<Complex> v)
    : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw Error(ErrorKind::BadParam, "sample count " + std::to_string(values.size()) +
                                         " does not match grid size " +
                                         std::to_string(grid.size()));
  }
  check_finite(values);
}

SampledSignal::SampledSignal(Grid g) : grid(std::move(g)), values(grid.size()) {}

Spectrum::Spectrum(WarpedGrid w, std::vector<Complex> v) : wgrid(std::move(w)), values(std::move(v)) {
  if (values.size() != wgrid.size()) {
    throw Error(ErrorKind::BadParam, "spectrum length does not match its lattice");
  }
  check_finite(values);
}

Grid shift_grid(const Grid& g, std::size_t stride) {
  if (stride == 0) throw Error(ErrorKind::BadParam, "stride must be >= 1");
  std::vector<std::size_t> counts;
  std::vector<double> spacing, origin;
  for (int j = 0; j < g.dim(); ++j) {
    if (g.count(j) % stride != 0 || g.count(j) / stride < 1) {
      throw Error(ErrorKind::BadParam, "stride " + std::to_string(stride) +
                                           " does not divide grid count " +
                                           std::to_string(g.count(j)));
    }
    counts.push_back(g.count(j) / stride);
    spacing.push_back(g.spacing(j) * static_cast<double>(stride));
    origin.push_back(g.origin(j));
  }
  if (stride == 1) return g;
  return Grid(counts, spacing, origin);
}

Gram::Gram(WarpedGrid w, std::size_t s, std::vector<Complex> v)
    : wgrid(std::move(w)), ugrid(shift_grid(wgrid.signal_grid(), s)), stride(s),
      values(std::move(v)) {
  if (values.size() != ugrid.size() * wgrid.size()) {
    throw Error(ErrorKind::BadParam, "gram length does not match its lattices");
  }
  check_finite(values);
}

std::size_t Gram::shift_signal_index(std::size_t row) const {
  const auto idx = ugrid.unravel(row);
  return wgrid.signal_grid().ravel({idx[0] * stride, idx[1] * stride});
}

// ---------------------------------------------------------------------------
// Reductions

Complex inner(const SampledSignal& f, const SampledSignal& g) {
  if (!(f.grid == g.grid)) throw Error(ErrorKind::GridMismatch, "inner product of signals on different grids");
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < f.values.size(); ++k) sum += f.values[k] * std::conj(g.values[k]);
  return f.grid.cell_volume() * sum;
}

double lp_norm(std::span<const Complex> values, double cell_volume, double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::BadP, "norm exponent must be >= 1");
  if (std::isinf(p)) {
    double peak = 0.0;
    for (const Complex& v : values) peak = std::max(peak, std::abs(v));
    return peak;
  }
  double sum = 0.0;
  if (p == 2.0) {
    for (const Complex& v : values) sum += std::norm(v);
    return std::sqrt(cell_volume * sum);
  }
  for (const Complex& v : values) sum += std::pow(std::abs(v), p);
  return std::pow(cell_volume * sum, 1.0 / p);
}

double lp_norm(const SampledSignal& f, double p) {
  return lp_norm(f.values, f.grid.cell_volume(), p);
}

double lp_norm(const Spectrum& s, double p) { return lp_norm(s.values, s.wgrid.cell_volume(), p); }

double lp_norm(const Gram& g, double p) { return lp_norm(g.values, g.cell_volume(), p); }

// ---------------------------------------------------------------------------
// Test-signal factory

namespace {

double centered_sq_distance(const Vector& x, const std::vector<double>& center) {
  double r2 = 0.0;
  for (int j = 0; j < x.size(); ++j) {
    const double c = static_cast<std::size_t>(j) < center.size() ? center[j] : 0.0;
    r2 += (x(j) - c) * (x(j) - c);
  }
  return r2;
}

void normalize(SampledSignal& s) {
  const double norm = lp_norm(s, 2.0);
  if (norm > 0.0) {
    for (Complex& v : s.values) v /= norm;
  }
}

}  // namespace

SampledSignal synthesize(SignalKind kind, const Grid& grid, const SynthParams& p) {
  if (!(p.sigma > 0.0)) throw Error(ErrorKind::BadParam, "sigma must be positive");
  if (p.envelope < 0.0) throw Error(ErrorKind::BadParam, "envelope width must be >= 0");
  if (!p.center.empty() && p.center.size() != static_cast<std::size_t>(grid.dim())) {
    throw Error(ErrorKind::BadParam, "centre has the wrong dimension");
  }

  SampledSignal out(grid);
  const double two_s2 = 2.0 * p.sigma * p.sigma;
  switch (kind) {
    case SignalKind::Gaussian:
      for (std::size_t k = 0; k < grid.size(); ++k) {
        out.values[k] = std::exp(-centered_sq_distance(grid.point(k), p.center) / two_s2);
      }
      normalize(out);
      break;

    case SignalKind::OddGaussian:
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const Vector x = grid.point(k);
        const double shift = p.center.empty() ? 0.0 : p.center[0];
        out.values[k] =
            (x(0) - shift) * std::exp(-centered_sq_distance(x, p.center) / two_s2);
      }
      normalize(out);
      break;

    case SignalKind::Chirp:
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const Vector x = grid.point(k);
        double linear = 0.0, cube = 0.0, r2 = 0.0;
        for (int j = 0; j < grid.dim(); ++j) {
          const double c = p.center.empty() ? 0.0 : p.center[j];
          const double d = x(j) - c;
          linear += d;
          cube += d * d * d;
          r2 += d * d;
        }
        const double phase = p.freq * linear + 0.5 * p.rate * r2 + p.cubic * cube / 3.0;
        const double amp = p.envelope > 0.0 ? std::exp(-r2 / (2.0 * p.envelope * p.envelope)) : 1.0;
        out.values[k] = std::polar(amp, phase);
      }
      break;

    case SignalKind::Noise: {
      if (!(p.band > 0.0 && p.band <= 1.0)) {
        throw Error(ErrorKind::BadParam, "noise band fraction must lie in (0, 1]");
      }
      std::mt19937_64 rng(p.seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      std::vector<Complex> white(grid.size());
      for (Complex& v : white) {
        const double re = normal(rng);
        const double im = normal(rng);
        v = {re, im};
      }
      std::vector<std::size_t> dims;
      for (int j = 0; j < grid.dim(); ++j) dims.push_back(grid.count(j));
      std::vector<Complex> spec(grid.size());
      FftPlan(dims, FftPlan::Direction::Forward).execute(white, spec);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto idx = grid.unravel(k);
        for (int j = 0; j < grid.dim(); ++j) {
          const auto n = static_cast<std::ptrdiff_t>(grid.count(j));
          auto m = static_cast<std::ptrdiff_t>(idx[j]);
          if (m >= n / 2) m -= n;
          if (std::abs(static_cast<double>(m)) > p.band * static_cast<double>(n) / 2.0) {
            spec[k] = 0.0;
          }
        }
      }
      FftPlan(dims, FftPlan::Direction::Backward).execute(spec, out.values);
      const double scale = 1.0 / static_cast<double>(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) {
        out.values[k] *= scale * std::exp(-centered_sq_distance(grid.point(k), p.center) / two_s2);
      }
      break;
    }

    case SignalKind::Ones:
      for (Complex& v : out.values) v = 1.0;
      break;
  }
  return out;
}

}  // namespace nslct
