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

// Independent reference computations for the tests. Nothing here calls the
// library's transform code; only its value types are shared.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "nslct/sampling.hpp"
#include "nslct/symplectic.hpp"

namespace oracle {

using nslct::Blocks;
using nslct::Complex;
using nslct::Grid;
using nslct::Matrix;
using nslct::SampledSignal;
using nslct::Vector;

inline constexpr double kPi = std::numbers::pi;

// Frozen 40-digit values (mpmath).
inline constexpr double kSqrtPi = 1.772453850905516027298167483341145182798;
inline constexpr double kDigammaHalf = -1.963510026021423479440976332998755567193;
inline constexpr double kDigammaOne = -0.5772156649015328606065120900824024310422;
inline constexpr double kGammaEighthOverThreeEighths = 3.178293365721560382911607318376096052174;
inline constexpr double kPittHalfN1 = 17.9045289263739669155947597483455178396;
inline constexpr double kPittHalfN2 = 4.839705716423275007195294286641444746672;
inline constexpr double kLogConstantN1 = -3.10823991187082365358440368435181427884;
inline constexpr double kLogConstantN2 = -1.721945550750933034749939441435461142689;
inline constexpr double kErfc3 = 2.209049699858544137277612958232037984771e-5;

struct SpecialPoint {
  double x, gamma, digamma;
};
inline constexpr SpecialPoint kSpecialTable[] = {
    {0.05, 19.47008531125551175633676, -20.49784499129986925658671},
    {0.1, 9.51350769866873128580798, -10.4237549404110762321003},
    {0.3, 2.991568987687590744642161, -3.502524222200133124915351},
    {0.7, 1.298055332647557856009718, -1.220023553697934740605672},
    {1.3, 0.8974706963062771817505328, -0.16919088886679960526019},
    {2.5, 1.329340388179137020473626, 0.7031566406452431872256903},
    {3.7, 4.170651783796604030086985, 1.167153539361511440947651},
    {5.5, 52.34277778455352018114901, 1.611093148581751123733627},
    {7.25, 1155.381013919989687202704, 1.910453526883736028382495},
    {9.9, 289867.7038401096375845355, 2.241180316606381436547882},
};

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

/// max_k |a_k - b_k| / max_k |b_k|.
inline double rel_max_err(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    num = std::max(num, std::abs(a[k] - b[k]));
    den = std::max(den, std::abs(b[k]));
  }
  return num / den;
}

/// ||a - b||_2 / ||b||_2.
inline double rel_l2_err(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    num += std::norm(a[k] - b[k]);
    den += std::norm(b[k]);
  }
  return std::sqrt(num / den);
}

/// Kernel straight from the blocks, with a fresh inverse of B.
inline Complex kernel(const Blocks& m, const Vector& x, const Vector& w) {
  const Matrix binv = m.b.inverse();
  const double phase =
      0.5 * (w.dot(m.d * binv * w) - 2.0 * w.dot(binv.transpose() * x) + x.dot(binv * m.a * x));
  const double n = static_cast<double>(x.size());
  return std::polar(std::pow(2.0 * kPi, -0.5 * n) / std::sqrt(std::abs(m.b.determinant())),
                    phase);
}

/// Riemann sum of f(x) conj(window(x)) K(x, w).
inline Complex quadrature(const SampledSignal& f, const Blocks& m, const Vector& w,
                          const std::function<Complex(const Vector&)>& window = nullptr) {
  Complex sum{};
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    const Vector x = f.grid.point(k);
    Complex v = f.values[k];
    if (window) v *= std::conj(window(x));
    sum += v * kernel(m, x, w);
  }
  return sum * f.grid.cell_volume();
}

/// Smallest singular value from the eigenvalues of B^T B.
inline double sigma_min(const Matrix& b) {
  const Eigen::MatrixXd btb = b.transpose() * b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(btb);
  return std::sqrt(std::max(0.0, es.eigenvalues().minCoeff()));
}

/// Naive DFT X_m = sum_k x_k exp(-2 pi i m.k / N), row-major, dims of length 1 or 2.
inline std::vector<Complex> dft(const std::vector<Complex>& x, const std::vector<std::size_t>& dims) {
  const std::size_t n0 = dims[0], n1 = dims.size() > 1 ? dims[1] : 1;
  std::vector<Complex> out(x.size());
  for (std::size_t m0 = 0; m0 < n0; ++m0)
    for (std::size_t m1 = 0; m1 < n1; ++m1) {
      Complex s{};
      for (std::size_t k0 = 0; k0 < n0; ++k0)
        for (std::size_t k1 = 0; k1 < n1; ++k1) {
          const double ph = -2.0 * kPi *
                            (static_cast<double>((m0 * k0) % n0) / static_cast<double>(n0) +
                             static_cast<double>((m1 * k1) % n1) / static_cast<double>(n1));
          s += x[k0 * n1 + k1] * std::polar(1.0, ph);
        }
      out[m0 * n1 + m1] = s;
    }
  return out;
}

/// Closed-form transform of exp(-|x|^2 / (2 s^2)) at w, any n.
inline Complex gaussian_transform(const Blocks& m, double s, const Vector& w) {
  const Matrix binv = m.b.inverse();
  Matrix chirp = binv * m.a;
  chirp = 0.5 * (chirp + chirp.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(chirp)};
  const Eigen::MatrixXd v = es.eigenvectors();
  // w^T B^{-T} x = (B^{-1} w) . x
  const Eigen::VectorXd beta = v.transpose() * (binv * w);
  Complex det_factor = 1.0, exponent = 0.0;
  for (int j = 0; j < beta.size(); ++j) {
    const Complex q(1.0 / (s * s), -es.eigenvalues()(j));
    det_factor /= std::sqrt(q);
    exponent += -0.5 * beta(j) * beta(j) / q;
  }
  const Complex out_chirp = std::polar(1.0, 0.5 * w.dot(m.d * binv * w));
  return out_chirp * det_factor * std::exp(exponent) / std::sqrt(std::abs(m.b.determinant()));
}

}  // namespace oracle
