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

#include "nslct/symplectic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "nslct/error.hpp"

namespace nslct {

namespace {

std::string residual_message(const char* constraint, double residual) {
  std::ostringstream os;
  os.precision(3);
  os << constraint << " violated, max-norm residual " << residual << " > "
     << kSymplecticTolerance;
  return os.str();
}

// Closed-form inverse: det is checked by the caller.
Matrix small_inverse(const Matrix& m, double det) {
  Matrix inv(m.rows(), m.cols());
  if (m.rows() == 1) {
    inv(0, 0) = 1.0 / m(0, 0);
  } else {
    inv(0, 0) = m(1, 1) / det;
    inv(0, 1) = -m(0, 1) / det;
    inv(1, 0) = -m(1, 0) / det;
    inv(1, 1) = m(0, 0) / det;
  }
  return inv;
}

double small_det(const Matrix& m) {
  return m.rows() == 1 ? m(0, 0) : m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

}  // namespace

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double sigma_min(const Matrix& m) {
  if (m.rows() == 1) return std::abs(m(0, 0));
  // B^T B = [[p, q], [q, r]]. The larger eigenvalue is well conditioned; the
  // smaller follows from det(B^T B) = det(B)^2.
  const double p = m(0, 0) * m(0, 0) + m(1, 0) * m(1, 0);
  const double r = m(0, 1) * m(0, 1) + m(1, 1) * m(1, 1);
  const double q = m(0, 0) * m(0, 1) + m(1, 0) * m(1, 1);
  const double half_trace = 0.5 * (p + r);
  const double lambda_max = half_trace + std::hypot(0.5 * (p - r), q);
  if (lambda_max <= 0.0) return 0.0;
  return std::abs(small_det(m)) / std::sqrt(lambda_max);
}

Blocks block_product(const Blocks& l, const Blocks& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
          l.c * r.b + l.d * r.d};
}

FreeSymplecticMatrix FreeSymplecticMatrix::validate(const Blocks& blocks) {
  return validate(blocks.a, blocks.b, blocks.c, blocks.d);
}

FreeSymplecticMatrix FreeSymplecticMatrix::validate(const Matrix& a, const Matrix& b,
                                                    const Matrix& c, const Matrix& d) {
  const auto n = a.rows();
  if (n < 1 || n > 2) {
    throw Error(ErrorKind::DimensionError, "block order must be 1 or 2, got " + std::to_string(n));
  }
  for (const Matrix* m : {&a, &b, &c, &d}) {
    if (m->rows() != n || m->cols() != n) {
      throw Error(ErrorKind::DimensionError, "blocks must all be square of the same order");
    }
    if (!m->allFinite()) throw Error(ErrorKind::BadParam, "non-finite block entry");
  }

  const Matrix identity = Matrix::Identity(n, n);
  if (double res = max_abs(a * b.transpose() - b * a.transpose()); res > kSymplecticTolerance) {
    throw Error(ErrorKind::SymplecticViolation, residual_message("AB^T = BA^T", res));
  }
  if (double res = max_abs(c * d.transpose() - d * c.transpose()); res > kSymplecticTolerance) {
    throw Error(ErrorKind::SymplecticViolation, residual_message("CD^T = DC^T", res));
  }
  if (double res = max_abs(a * d.transpose() - b * c.transpose() - identity);
      res > kSymplecticTolerance) {
    throw Error(ErrorKind::SymplecticViolation, residual_message("AD^T - BC^T = I", res));
  }

  const double det = small_det(b);
  if (!(std::abs(det) > kDetTolerance)) {
    std::ostringstream os;
    os << "|det B| = " << std::abs(det) << " <= " << kDetTolerance;
    throw Error(ErrorKind::SingularB, os.str());
  }

  FreeSymplecticMatrix m;
  m.a_ = a;
  m.b_ = b;
  m.c_ = c;
  m.d_ = d;
  m.det_b_ = det;
  m.b_inv_ = small_inverse(b, det);
  m.b_inv_t_ = m.b_inv_.transpose();
  m.d_b_inv_ = d * m.b_inv_;
  m.b_inv_a_ = m.b_inv_ * a;
  m.sigma_min_b_ = sigma_min(b);
  return m;
}

FreeSymplecticMatrix inverse(const FreeSymplecticMatrix& m) {
  return FreeSymplecticMatrix::validate(m.d().transpose(), -m.b().transpose(),
                                        -m.c().transpose(), m.a().transpose());
}

FreeSymplecticMatrix compose(const FreeSymplecticMatrix& m, const FreeSymplecticMatrix& n) {
  if (m.dim() != n.dim()) {
    throw Error(ErrorKind::DimensionError, "cannot compose matrices of different order");
  }
  return FreeSymplecticMatrix::validate(block_product(m.blocks(), n.blocks()));
}

namespace preset {

namespace {

void check_dim(int n) {
  if (n < 1 || n > 2) {
    throw Error(ErrorKind::DimensionError, "dimension must be 1 or 2, got " + std::to_string(n));
  }
}

}  // namespace

FreeSymplecticMatrix fourier(int n) {
  check_dim(n);
  const Matrix zero = Matrix::Zero(n, n);
  const Matrix identity = Matrix::Identity(n, n);
  return FreeSymplecticMatrix::validate(zero, identity, -identity, zero);
}

FreeSymplecticMatrix frft(int n, double alpha) {
  check_dim(n);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  // sin(k pi) evaluates to ~1e-16, not zero.
  if (std::abs(s) <= 1e-12) {
    throw Error(ErrorKind::SingularB, "frft angle is a multiple of pi (sin alpha = 0)");
  }
  const Matrix identity = Matrix::Identity(n, n);
  return FreeSymplecticMatrix::validate(identity * c, identity * s, -identity * s, identity * c);
}

FreeSymplecticMatrix fresnel(const Matrix& b) {
  check_dim(static_cast<int>(b.rows()));
  const auto n = b.rows();
  const Matrix identity = Matrix::Identity(n, n);
  return FreeSymplecticMatrix::validate(identity, b, Matrix::Zero(n, n), identity);
}

FreeSymplecticMatrix fresnel(int n, double b) {
  check_dim(n);
  return fresnel(Matrix(Matrix::Identity(n, n) * b));
}

FreeSymplecticMatrix separable(std::span<const double> a, std::span<const double> b,
                               std::span<const double> c, std::span<const double> d) {
  const auto n = a.size();
  if (n < 1 || n > 2 || b.size() != n || c.size() != n || d.size() != n) {
    throw Error(ErrorKind::DimensionError, "separable preset needs 1 or 2 entries per block");
  }
  for (double bj : b) {
    if (bj == 0.0) throw Error(ErrorKind::SingularB, "separable preset has b_jj = 0");
  }
  auto diag = [n](std::span<const double> v) {
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t j = 0; j < n; ++j) m(j, j) = v[j];
    return m;
  };
  return FreeSymplecticMatrix::validate(diag(a), diag(b), diag(c), diag(d));
}

FreeSymplecticMatrix separable(int n, double a, double b, double c, double d) {
  check_dim(n);
  const std::array<double, 2> av{a, a}, bv{b, b}, cv{c, c}, dv{d, d};
  const auto len = static_cast<std::size_t>(n);
  return separable(std::span(av).first(len), std::span(bv).first(len), std::span(cv).first(len),
                   std::span(dv).first(len));
}

}  // namespace preset

FreeSymplecticMatrix random_free_symplectic(std::uint64_t seed, int n) {
  preset::check_dim(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.6, 1.5);
  std::uniform_real_distribution<double> angle(0.3, 1.3);
  const auto len = static_cast<std::size_t>(n);
  while (true) {
    Matrix shear(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = r; c < n; ++c) shear(r, c) = shear(c, r) = 0.8 * unit(rng);
    }
    std::array<double, 2> a{}, b{}, c{}, d{};
    for (std::size_t j = 0; j < len; ++j) {
      a[j] = scale(rng);
      b[j] = unit(rng) < 0.0 ? -scale(rng) : scale(rng);
      c[j] = 0.5 * unit(rng);
      d[j] = (1.0 + b[j] * c[j]) / a[j];
    }
    const auto sep = preset::separable(std::span(a).first(len), std::span(b).first(len),
                                       std::span(c).first(len), std::span(d).first(len));
    const Blocks product = block_product(
        block_product(preset::fresnel(shear).blocks(), sep.blocks()),
        preset::frft(n, angle(rng)).blocks());
    const double det_b = std::abs(product.b.determinant());
    if (det_b < 0.25) continue;
    if (det_b / sigma_min(product.b) > 3.0) continue;
    const Matrix chirp = product.b.inverse() * product.a;
    if (max_abs(chirp) > 1.0) continue;
    return FreeSymplecticMatrix::validate(product);
  }
}

}  // namespace nslct
