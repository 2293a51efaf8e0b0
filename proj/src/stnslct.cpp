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

#include "nslct/stnslct.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nslct/error.hpp"
#include "nslct/parallel.hpp"

namespace nslct {

namespace {

// Fixed reduction partition; independent of the worker count.
constexpr std::size_t kReductionChunks = 16;

bool same_geometry(const Grid& a, const Grid& b) { return a == b; }

}  // namespace

WindowSpec::WindowSpec(SampledSignal window, std::size_t stride)
    : window_(std::move(window)), stride_(stride), norm2_(0.0) {
  if (stride_ == 0) throw Error(ErrorKind::BadParam, "stride must be >= 1");
  const Grid& g = window_.grid;
  for (int j = 0; j < g.dim(); ++j) {
    const double offset = -g.origin(j) / g.spacing(j);
    const double rounded = std::round(offset);
    if (std::abs(offset - rounded) > 1e-9 * std::max(1.0, std::abs(offset))) {
      throw Error(ErrorKind::GridMismatch, "window grid does not contain x = 0 as a sample");
    }
    zero_offset_[j] = static_cast<std::ptrdiff_t>(rounded);
  }
  norm2_ = inner(window_, window_).real();
  if (!(norm2_ > 0.0)) throw Error(ErrorKind::BadParam, "window must be non-zero");
  // Validates divisibility of every axis.
  shift_grid(g, stride_);
}

Complex WindowSpec::shifted(std::size_t k, std::size_t l) const {
  const Grid& g = window_.grid;
  const auto ik = g.unravel(k);
  const auto il = g.unravel(l);
  std::array<std::size_t, 2> idx{0, 0};
  for (int j = 0; j < g.dim(); ++j) {
    const auto i = static_cast<std::ptrdiff_t>(ik[j]) - static_cast<std::ptrdiff_t>(il[j]) +
                   zero_offset_[j];
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(g.count(j))) return {0.0, 0.0};
    idx[j] = static_cast<std::size_t>(i);
  }
  return window_.values[g.ravel(idx)];
}

Gram stnslct_gram(const SampledSignal& f, const WindowSpec& wspec, const FreeSymplecticMatrix& m) {
  if (!same_geometry(f.grid, wspec.window().grid)) {
    throw Error(ErrorKind::GridMismatch, "signal and window grids differ");
  }
  const NslctPlan plan(f.grid, m);
  const Grid ugrid = shift_grid(f.grid, wspec.stride());
  const std::size_t row_len = f.grid.size();
  std::vector<Complex> values(ugrid.size() * row_len);

  const std::size_t stride = wspec.stride();
  parallel_for(ugrid.size(), [&](std::size_t row) {
    const auto u = ugrid.unravel(row);
    const std::size_t l = f.grid.ravel({u[0] * stride, u[1] * stride});
    std::vector<Complex> windowed(row_len);
    for (std::size_t k = 0; k < row_len; ++k) {
      windowed[k] = f.values[k] * std::conj(wspec.shifted(k, l));
    }
    plan.forward(windowed, std::span(values).subspan(row * row_len, row_len));
  });
  return Gram(plan.wgrid(), wspec.stride(), std::move(values));
}

double boundedness_margin(const Gram& gram, const SampledSignal& f, const WindowSpec& wspec,
                          const FreeSymplecticMatrix& m) {
  const double bound = std::pow(2.0 * std::numbers::pi, -0.5 * m.dim()) /
                       std::sqrt(std::abs(m.det_b())) * lp_norm(f, 2.0) *
                       std::sqrt(wspec.norm2());
  return bound - lp_norm(gram, kInfinity);
}

SampledSignal stnslct_reconstruct(const Gram& gram, const WindowSpec& wspec,
                                  const FreeSymplecticMatrix& m, ReconstructionMode mode) {
  const Grid& grid = gram.wgrid.signal_grid();
  if (!same_geometry(grid, wspec.window().grid) || gram.stride != wspec.stride()) {
    throw Error(ErrorKind::GridMismatch, "gram, window and stride do not belong together");
  }
  const NslctPlan plan(grid, m);
  if (max_abs(gram.wgrid.map() - m.b()) > 1e-12 * std::max(1.0, max_abs(m.b()))) {
    throw Error(ErrorKind::GridMismatch, "gram lattice is not warped by this matrix's B");
  }

  const std::size_t n = grid.size();
  const std::size_t rows = gram.rows();
  const double ucell = gram.ugrid.cell_volume();
  const std::size_t chunks = std::min(kReductionChunks, rows);
  std::vector<std::vector<Complex>> num(chunks, std::vector<Complex>(n));
  std::vector<std::vector<double>> den(chunks, std::vector<double>(n));

  parallel_chunks(rows, chunks, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    std::vector<Complex> local(n);
    for (std::size_t row = begin; row < end; ++row) {
      // f(x) conj(phi(x - u)) for this u.
      plan.inverse(std::span(gram.values).subspan(row * n, n), local);
      const std::size_t l = gram.shift_signal_index(row);
      for (std::size_t k = 0; k < n; ++k) {
        const Complex phi = wspec.shifted(k, l);
        num[chunk][k] += phi * local[k] * ucell;
        den[chunk][k] += std::norm(phi) * ucell;
      }
    }
  });

  SampledSignal out(grid);
  for (std::size_t k = 0; k < n; ++k) {
    Complex total_num{0.0, 0.0};
    double total_den = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) {
      total_num += num[c][k];
      total_den += den[c][k];
    }
    if (total_den < 1e-9) {
      std::ostringstream os;
      os << "window partition sum " << total_den << " < 1e-9 at sample " << k;
      throw Error(ErrorKind::CoverageError, os.str());
    }
    out.values[k] =
        total_num / (mode == ReconstructionMode::PartitionOfUnity ? total_den : wspec.norm2());
  }
  return out;
}

Complex moyal(const Gram& g1, const Gram& g2) {
  if (!(g1.wgrid == g2.wgrid) || g1.stride != g2.stride) {
    throw Error(ErrorKind::GridMismatch, "grams live on different lattices");
  }
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < g1.values.size(); ++i) sum += g1.values[i] * std::conj(g2.values[i]);
  return g1.cell_volume() * sum;
}

}  // namespace nslct
