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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nslct/error.hpp"
#include "nslct/stnslct.hpp"
#include "oracles.hpp"

using namespace nslct;

namespace {

const double kPi = std::numbers::pi;

SampledSignal unit_gaussian(const Grid& g, double sigma = 1.0, std::vector<double> center = {}) {
  SynthParams p;
  p.sigma = sigma;
  p.center = std::move(center);
  return synthesize(SignalKind::Gaussian, g, p);
}

SampledSignal chirped_window(const Grid& g, double rate) {
  SynthParams p;
  p.rate = rate;
  p.envelope = 1.0;
  return synthesize(SignalKind::Chirp, g, p);
}

SampledSignal scaled(SampledSignal f, Complex c) {
  for (auto& v : f.values) v *= c;
  return f;
}

std::vector<Complex> row(const Gram& g, std::size_t r) {
  const auto begin = g.values.begin() + static_cast<std::ptrdiff_t>(r * g.row_length());
  return {begin, begin + static_cast<std::ptrdiff_t>(g.row_length())};
}

}  // namespace

TEST_CASE("window spec") {
  const Grid g = Grid::centered(1, 64, 0.25);
  const auto w = unit_gaussian(g);
  const WindowSpec spec(w);
  CHECK(std::abs(spec.norm2() - inner(w, w).real()) <= 1e-14);
  // phi(x_k - x_l) for k - l = 3 is phi(0.75).
  CHECK(spec.shifted(40, 37) == w.values[32 + 3]);
  CHECK(spec.shifted(63, 0) == Complex{});
  CHECK_THROWS_AS(WindowSpec(SampledSignal(g)), Error);
  CHECK_THROWS_AS(WindowSpec(w, 0), Error);
  const Grid off({64}, {0.25}, {-8.1});
  try {
    WindowSpec{unit_gaussian(off)};
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GridMismatch);
  }
}

TEST_CASE("unit window collapses to the plain transform") {
  const Grid g = Grid::centered(1, 256, 0.1);
  const auto f = unit_gaussian(g);
  const auto m = random_free_symplectic(5, 1);
  const Gram gram = stnslct_gram(f, WindowSpec(synthesize(SignalKind::Ones, g)), m);
  const auto plain = nslct_fast(f, m).values;
  // The shifted boxcar still covers the signal's support for |u| <= 4.
  for (std::size_t r = 0; r < gram.rows(); ++r) {
    const double u = gram.ugrid.coordinate(0, r);
    if (std::abs(u) > 4.0) continue;
    CHECK(oracle::rel_max_err(row(gram, r), plain) <= 1e-10);
  }
}

TEST_CASE("matched Gaussians attain the bound at the origin") {
  const Grid g = Grid::centered(1, 256, 0.1);
  const auto f = unit_gaussian(g);
  const WindowSpec w(f);
  const auto m = preset::fourier(1);
  const Gram gram = stnslct_gram(f, w, m);
  const std::size_t origin = gram.ugrid.ravel({128, 0}) * gram.row_length() + gram.wgrid.zero_index();
  CHECK(std::abs(gram.values[origin] - 1.0 / std::sqrt(2 * kPi)) <= 1e-10);
  const double bound = 1.0 / std::sqrt(2 * kPi);
  const double margin = boundedness_margin(gram, f, w, m);
  CHECK(margin >= -1e-9 * bound);
  CHECK(margin <= 1e-6 * bound);

  SynthParams p;
  p.seed = 3;
  const auto noise = synthesize(SignalKind::Noise, g, p);
  const Gram ng = stnslct_gram(noise, w, m);
  CHECK(boundedness_margin(ng, noise, w, m) > 0.0);

  const auto twice = scaled(noise, 2.0);
  const double m1 = boundedness_margin(ng, noise, w, m);
  const double m2 = boundedness_margin(stnslct_gram(twice, w, m), twice, w, m);
  CHECK(std::abs(m2 - 2 * m1) <= 1e-12 * std::abs(m2));
}

TEST_CASE("zero input") {
  const Grid g = Grid::centered(1, 64, 0.25);
  const WindowSpec w(unit_gaussian(g));
  const auto m = random_free_symplectic(2, 1);
  const Gram gram = stnslct_gram(SampledSignal(g), w, m);
  for (const Complex& v : gram.values) CHECK(v == Complex{});
  for (const Complex& v : stnslct_reconstruct(gram, w, m).values) CHECK(v == Complex{});
}

TEST_CASE("fourier preset equals the discrete short-time Fourier transform") {
  const Grid g = Grid::centered(1, 128, 0.1);
  SynthParams p;
  p.freq = 2.0;
  p.rate = 0.3;
  p.envelope = 1.5;
  const auto f = synthesize(SignalKind::Chirp, g, p);
  const double sigma = 0.8;
  const WindowSpec w(unit_gaussian(g, sigma));
  const Gram gram = stnslct_gram(f, w, preset::fourier(1));
  const double norm = std::pow(kPi * sigma * sigma, -0.25);
  double worst = 0.0, peak = 0.0;
  for (std::size_t r = 0; r < gram.rows(); r += 7) {
    const double u = gram.ugrid.coordinate(0, r);
    for (std::size_t i = 0; i < gram.row_length(); i += 5) {
      const double omega = gram.wgrid.point(i)(0);
      Complex sum{};
      for (std::size_t k = 0; k < g.size(); ++k) {
        const double x = g.coordinate(0, k);
        const double phi = norm * std::exp(-(x - u) * (x - u) / (2 * sigma * sigma));
        sum += f.values[k] * phi * std::polar(1.0, -omega * x);
      }
      sum *= g.cell_volume() / std::sqrt(2 * kPi);
      const Complex got = gram.values[r * gram.row_length() + i];
      worst = std::max(worst, std::abs(got - sum));
      peak = std::max(peak, std::abs(sum));
    }
  }
  CHECK(worst <= 1e-10 * peak);
}

TEST_CASE("general matrices agree with direct quadrature") {
  const Grid g = Grid::centered(2, 32, 0.5);
  const auto f = unit_gaussian(g, 1.2, {0.3, -0.4});
  const double sigma = 1.1;
  const WindowSpec w(unit_gaussian(g, sigma), 2);
  const auto m = random_free_symplectic(17, 2);
  const Gram gram = stnslct_gram(f, w, m);
  const double norm = 1.0 / (std::sqrt(kPi) * sigma);
  double worst = 0.0, peak = 0.0;
  for (std::size_t r = 0; r < gram.rows(); r += 37) {
    const Vector u = gram.ugrid.point(r);
    auto phi = [&](const Vector& x) {
      return Complex(norm * std::exp(-(x - u).squaredNorm() / (2 * sigma * sigma)));
    };
    for (std::size_t i = 0; i < gram.row_length(); i += 53) {
      const Complex want = oracle::quadrature(f, m.blocks(), gram.wgrid.point(i), phi);
      worst = std::max(worst, std::abs(gram.values[r * gram.row_length() + i] - want));
      peak = std::max(peak, std::abs(want));
    }
  }
  CHECK(worst <= 1e-10 * peak);
}

TEST_CASE("linear in the signal, antilinear in the window") {
  const Grid g = Grid::centered(1, 128, 0.1);
  SynthParams p;
  p.seed = 11;
  const auto f = synthesize(SignalKind::Noise, g, p);
  const auto phi = chirped_window(g, 0.7);
  const auto m = random_free_symplectic(8, 1);
  const Complex c(0.6, -1.3);
  const Gram base = stnslct_gram(f, WindowSpec(phi), m);
  const Gram by_window = stnslct_gram(f, WindowSpec(scaled(phi, c)), m);
  const Gram by_signal = stnslct_gram(scaled(f, c), WindowSpec(phi), m);
  std::vector<Complex> conj_c(base.values.size()), lin_c(base.values.size());
  for (std::size_t i = 0; i < base.values.size(); ++i) {
    conj_c[i] = std::conj(c) * base.values[i];
    lin_c[i] = c * base.values[i];
  }
  CHECK(oracle::rel_max_err(by_window.values, conj_c) <= 1e-12);
  CHECK(oracle::rel_max_err(by_signal.values, lin_c) <= 1e-12);
}

TEST_CASE("reconstruction") {
  const Grid g = Grid::centered(1, 256, 0.1);
  const auto f = unit_gaussian(g, 1.1, {0.4});
  const WindowSpec w(unit_gaussian(g, 0.9));
  for (const auto& m : {preset::fourier(1), preset::fresnel(1, 1.5), preset::frft(1, 0.7),
                        preset::separable(1, 2, 2, 0, 0.5), random_free_symplectic(4, 1)}) {
    const Gram gram = stnslct_gram(f, w, m);
    for (auto mode : {ReconstructionMode::PartitionOfUnity, ReconstructionMode::ConstantNorm}) {
      CHECK(oracle::rel_l2_err(stnslct_reconstruct(gram, w, m, mode).values, f.values) <= 1e-3);
    }
  }
  const Grid g2 = Grid::centered(2, 64, 0.25);
  const auto f2 = unit_gaussian(g2, 1.0, {0.5, -0.25});
  const WindowSpec w2(unit_gaussian(g2, 1.0), 2);
  const auto m2 = random_free_symplectic(6, 2);
  const Gram gram2 = stnslct_gram(f2, w2, m2);
  CHECK(oracle::rel_l2_err(stnslct_reconstruct(gram2, w2, m2).values, f2.values) <= 1e-3);

  CHECK_THROWS_AS(stnslct_reconstruct(gram2, w2, random_free_symplectic(7, 2)), Error);
}

TEST_CASE("reconstruction needs window coverage") {
  const Grid g = Grid::centered(1, 64, 0.25);
  SampledSignal spike(g);
  spike.values[32] = 1.0;
  const WindowSpec w(spike, 2);
  const auto m = preset::fourier(1);
  const Gram gram = stnslct_gram(unit_gaussian(g), w, m);
  try {
    stnslct_reconstruct(gram, w, m);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CoverageError);
  }
}

TEST_CASE("moyal identities") {
  const Grid g = Grid::centered(1, 256, 0.1);
  const auto m = random_free_symplectic(9, 1);
  SynthParams even;
  even.sigma = 1.1;
  even.center = {0.2};
  const auto f = synthesize(SignalKind::Gaussian, g, even);
  const auto h = synthesize(SignalKind::OddGaussian, g, even);
  const auto phi1 = chirped_window(g, 0.5), phi2 = chirped_window(g, -0.8);
  const WindowSpec w1(phi1), w2(phi2);

  const Gram v = stnslct_gram(f, w1, m);
  const double energy = inner(f, f).real() * w1.norm2();
  CHECK(std::abs(moyal(v, v).real() - energy) <= 1e-6 * energy);
  CHECK(std::abs(lp_norm(v, 2.0) * lp_norm(v, 2.0) - energy) <= 1e-6 * energy);

  const Gram vh = stnslct_gram(h, w1, m);
  CHECK(std::abs(moyal(v, vh)) <= 1e-8 * lp_norm(v, 2.0) * lp_norm(vh, 2.0));

  // Even and odd windows.
  SynthParams centred;
  const WindowSpec we(synthesize(SignalKind::Gaussian, g, centred));
  const WindowSpec wo(synthesize(SignalKind::OddGaussian, g, centred));
  const Gram ve = stnslct_gram(f, we, m), vo = stnslct_gram(f, wo, m);
  CHECK(std::abs(moyal(ve, vo)) <= 1e-8 * lp_norm(ve, 2.0) * lp_norm(vo, 2.0));

  // <V1, V2> = <f, h> <phi2, phi1> for complex windows and a non-orthogonal pair.
  SynthParams shifted = even;
  shifted.center = {0.9};
  const auto k = synthesize(SignalKind::Gaussian, g, shifted);
  const Complex got = moyal(stnslct_gram(f, w1, m), stnslct_gram(k, w2, m));
  const Complex want = inner(f, k) * inner(phi2, phi1);
  CHECK(std::abs(got - want) <= 1e-6 * std::abs(want));
  CHECK(std::abs(want - inner(f, k) * inner(phi1, phi2)) > 1e-3 * std::abs(want));
}

TEST_CASE("energy identity with a strided shift lattice") {
  const Grid g = Grid::centered(2, 64, 0.25);
  const auto f = unit_gaussian(g, 1.3, {0.5, 0.0});
  const WindowSpec w(unit_gaussian(g, 0.9), 2);
  const Gram v = stnslct_gram(f, w, random_free_symplectic(10, 2));
  const double energy = w.norm2();
  CHECK(std::abs(moyal(v, v).real() - energy) <= 1e-6 * energy);
}

TEST_CASE("mismatched grids") {
  const auto f = unit_gaussian(Grid::centered(1, 64, 0.25));
  const WindowSpec w(unit_gaussian(Grid::centered(1, 128, 0.25)));
  try {
    stnslct_gram(f, w, preset::fourier(1));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GridMismatch);
  }
}
