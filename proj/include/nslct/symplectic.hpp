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

#include <cstdint>
#include <span>

#include <Eigen/Dense>

namespace nslct {

/// Square matrix of order 1 or 2. Storage is inline (no heap).
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 2, 2>;
/// Point in R^1 or R^2.
using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 2, 1>;

/// Absolute max-norm tolerance on the three block constraints.
inline constexpr double kSymplecticTolerance = 1e-9;
/// Matrices with |det B| at or below this are rejected as degenerate.
inline constexpr double kDetTolerance = 1e-12;

/// The four n x n blocks of a 2n x 2n matrix (A, B : C, D). No constraints.
struct Blocks {
  Matrix a, b, c, d;
};

/// Multiplies two block matrices as 2n x 2n matrices.
Blocks block_product(const Blocks& lhs, const Blocks& rhs);

/// Largest absolute entry.
double max_abs(const Matrix& m);

/// A real 2n x 2n symplectic matrix M = (A, B : C, D) with det B != 0,
/// n in {1, 2}. Immutable once validated; the derived quantities used by the
/// transform kernels are cached at construction.
class FreeSymplecticMatrix {
 public:
  /// Checks AB^T = BA^T, CD^T = DC^T, AD^T - BC^T = I (max-norm within
  /// kSymplecticTolerance) and |det B| > kDetTolerance.
  ///
  /// Throws DimensionError, SymplecticViolation (naming the constraint and its
  /// residual) or SingularB.
  static FreeSymplecticMatrix validate(const Matrix& a, const Matrix& b, const Matrix& c,
                                       const Matrix& d);
  static FreeSymplecticMatrix validate(const Blocks& blocks);

  int dim() const noexcept { return static_cast<int>(a_.rows()); }

  const Matrix& a() const noexcept { return a_; }
  const Matrix& b() const noexcept { return b_; }
  const Matrix& c() const noexcept { return c_; }
  const Matrix& d() const noexcept { return d_; }
  Blocks blocks() const { return {a_, b_, c_, d_}; }

  double det_b() const noexcept { return det_b_; }
  const Matrix& b_inv() const noexcept { return b_inv_; }
  const Matrix& b_inv_t() const noexcept { return b_inv_t_; }
  /// D B^{-1}; the quadratic form of the output chirp.
  const Matrix& d_b_inv() const noexcept { return d_b_inv_; }
  /// B^{-1} A; the quadratic form of the input chirp.
  const Matrix& b_inv_a() const noexcept { return b_inv_a_; }
  /// Smallest singular value of B.
  double sigma_min_b() const noexcept { return sigma_min_b_; }

 private:
  FreeSymplecticMatrix() = default;

  Matrix a_, b_, c_, d_;
  double det_b_ = 0.0;
  Matrix b_inv_, b_inv_t_, d_b_inv_, b_inv_a_;
  double sigma_min_b_ = 0.0;
};

/// M^{-1} = (D^T, -B^T : -C^T, A^T).
FreeSymplecticMatrix inverse(const FreeSymplecticMatrix& m);

/// The product M N, validated. Throws SingularB when the product is not free.
FreeSymplecticMatrix compose(const FreeSymplecticMatrix& m, const FreeSymplecticMatrix& n);

/// Smallest singular value of a 1x1 or 2x2 matrix, closed form.
double sigma_min(const Matrix& m);

namespace preset {

/// (0, I : -I, 0): the plain Fourier transform.
FreeSymplecticMatrix fourier(int n);

/// (I cos a, I sin a : -I sin a, I cos a). Throws SingularB when sin a = 0.
FreeSymplecticMatrix frft(int n, double alpha);

/// (I, B : 0, I). B must be symmetric for the result to be symplectic.
FreeSymplecticMatrix fresnel(const Matrix& b);
FreeSymplecticMatrix fresnel(int n, double b);

/// Diagonal blocks with per-axis entries a_j, b_j, c_j, d_j.
FreeSymplecticMatrix separable(std::span<const double> a, std::span<const double> b,
                               std::span<const double> c, std::span<const double> d);
FreeSymplecticMatrix separable(int n, double a, double b, double c, double d);

}  // namespace preset

/// A random free symplectic matrix built as fresnel * separable * frft with
/// moderate entries: |det B| >= 0.25, sigma_max(B) <= 3 and max |B^{-1} A| <= 1.
/// Deterministic in the seed.
FreeSymplecticMatrix random_free_symplectic(std::uint64_t seed, int n);

}  // namespace nslct
