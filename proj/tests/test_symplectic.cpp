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
#include <string>

#include <Eigen/SVD>

#include "nslct/error.hpp"
#include "nslct/symplectic.hpp"
#include "oracles.hpp"

using namespace nslct;

namespace {

Matrix m1(double v) { return Matrix::Constant(1, 1, v); }
Matrix eye(int n) { return Matrix::Identity(n, n); }
Matrix zero(int n) { return Matrix::Zero(n, n); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

double blocks_distance(const Blocks& x, const Blocks& y) {
  return std::max({max_abs(x.a - y.a), max_abs(x.b - y.b), max_abs(x.c - y.c), max_abs(x.d - y.d)});
}

void check_symplectic(const FreeSymplecticMatrix& m) {
  const int n = m.dim();
  CHECK(max_abs(m.a() * m.b().transpose() - m.b() * m.a().transpose()) <= kSymplecticTolerance);
  CHECK(max_abs(m.c() * m.d().transpose() - m.d() * m.c().transpose()) <= kSymplecticTolerance);
  CHECK(max_abs(m.a() * m.d().transpose() - m.b() * m.c().transpose() - eye(n)) <=
        kSymplecticTolerance);
  CHECK(std::abs(m.det_b()) > kDetTolerance);
}

}  // namespace

TEST_CASE("identity blocks validate") {
  const auto m = FreeSymplecticMatrix::validate(m1(1), m1(1), m1(0), m1(1));
  CHECK(m.det_b() == 1.0);
  CHECK(m.sigma_min_b() == 1.0);
}

TEST_CASE("fourier blocks validate") {
  for (int n : {1, 2}) {
    const auto m = FreeSymplecticMatrix::validate(zero(n), eye(n), -eye(n), zero(n));
    CHECK(m.det_b() == 1.0);
  }
}

TEST_CASE("all-identity blocks violate the determinant constraint") {
  try {
    FreeSymplecticMatrix::validate(eye(2), eye(2), eye(2), eye(2));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SymplecticViolation);
    CHECK(std::string(e.what()).find("AD^T - BC^T") != std::string::npos);
  }
}

TEST_CASE("each constraint is named") {
  Matrix a = eye(2);
  a(0, 1) = 0.5;  // A B^T not symmetric with B = I
  try {
    FreeSymplecticMatrix::validate(a, eye(2), zero(2), eye(2));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SymplecticViolation);
    CHECK(std::string(e.what()).find("AB^T") != std::string::npos);
  }
}

TEST_CASE("singular and mis-sized blocks") {
  CHECK(kind_of([] { FreeSymplecticMatrix::validate(m1(1), m1(0), m1(0), m1(1)); }) ==
        ErrorKind::SingularB);
  CHECK(kind_of([] { FreeSymplecticMatrix::validate(eye(1), eye(2), eye(2), eye(2)); }) ==
        ErrorKind::DimensionError);
  CHECK(kind_of([] {
          Matrix nan = m1(std::nan(""));
          FreeSymplecticMatrix::validate(nan, m1(1), m1(0), m1(1));
        }) == ErrorKind::BadParam);
}

TEST_CASE("presets") {
  for (int n : {1, 2}) {
    const auto f = preset::fourier(n);
    CHECK(f.a() == zero(n));
    CHECK(f.b() == eye(n));
    CHECK(f.c() == -eye(n));
    CHECK(f.d() == zero(n));
    CHECK(blocks_distance(preset::frft(n, std::numbers::pi / 2).blocks(), f.blocks()) < 1e-15);

    const auto fr = preset::fresnel(n, 1.0);
    CHECK(fr.a() == eye(n));
    CHECK(fr.b() == eye(n));
    CHECK(fr.c() == zero(n));
    CHECK(fr.d() == eye(n));
  }
  const auto s = preset::separable(1, 1, 2, 0, 1);
  CHECK(s.det_b() == 2.0);
  CHECK(s.sigma_min_b() == 2.0);
  CHECK(preset::separable(2, 2, 2, 0, 0.5).det_b() == doctest::Approx(4.0));

  CHECK(kind_of([] { preset::frft(1, 0.0); }) == ErrorKind::SingularB);
  CHECK(kind_of([] { preset::frft(2, std::numbers::pi); }) == ErrorKind::SingularB);
  CHECK(kind_of([] { preset::separable(1, 1, 0, 0, 1); }) == ErrorKind::SingularB);
  // a d - b c = 0.5: not symplectic.
  CHECK(kind_of([] { preset::separable(1, 1, 2, 0, 0.5); }) == ErrorKind::SymplecticViolation);
  Matrix skew = zero(2);
  skew(0, 1) = 1;
  skew(1, 0) = 0.5;
  CHECK(kind_of([&] { preset::fresnel(skew); }) == ErrorKind::SymplecticViolation);
  CHECK(kind_of([] { preset::fourier(3); }) == ErrorKind::DimensionError);
}

TEST_CASE("inverse") {
  for (int n : {1, 2}) {
    const auto inv = inverse(preset::fourier(n));
    CHECK(inv.a() == zero(n));
    CHECK(inv.b() == -eye(n));
    CHECK(inv.c() == eye(n));
    CHECK(inv.d() == zero(n));
  }
  Matrix b(2, 2);
  b << 1.5, 0.25, 0.25, -0.5;
  const auto inv = inverse(preset::fresnel(b));
  CHECK(inv.a() == eye(2));
  CHECK(inv.b() == Matrix(-b.transpose()));
  CHECK(inv.c() == zero(2));
  CHECK(inv.d() == eye(2));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_free_symplectic(seed, 1 + static_cast<int>(seed % 2));
    CHECK(blocks_distance(inverse(inverse(m)).blocks(), m.blocks()) <= 1e-15);
    const Blocks id = block_product(m.blocks(), inverse(m).blocks());
    const int n = m.dim();
    CHECK(blocks_distance(id, {eye(n), zero(n), zero(n), eye(n)}) <= 1e-12);
  }
}

TEST_CASE("compose") {
  CHECK(kind_of([] { compose(preset::fresnel(1, 1.0), preset::fresnel(1, -1.0)); }) ==
        ErrorKind::SingularB);
  CHECK(kind_of([] { compose(preset::fourier(2), preset::fourier(2)); }) == ErrorKind::SingularB);
  const double q = std::numbers::pi / 4;
  for (int n : {1, 2}) {
    CHECK(blocks_distance(compose(preset::frft(n, q), preset::frft(n, q)).blocks(),
                          preset::frft(n, 2 * q).blocks()) <= 1e-12);
  }
  // Composition is the 2n x 2n product.
  const auto m = random_free_symplectic(3, 2), k = random_free_symplectic(4, 2);
  Eigen::Matrix4d big_m, big_k;
  big_m << m.a(), m.b(), m.c(), m.d();
  big_k << k.a(), k.b(), k.c(), k.d();
  const Eigen::Matrix4d prod = big_m * big_k;
  const auto mk = compose(m, k);
  CHECK(max_abs(mk.a() - prod.topLeftCorner(2, 2)) <= 1e-12);
  CHECK(max_abs(mk.b() - prod.topRightCorner(2, 2)) <= 1e-12);
  CHECK(max_abs(mk.c() - prod.bottomLeftCorner(2, 2)) <= 1e-12);
  CHECK(max_abs(mk.d() - prod.bottomRightCorner(2, 2)) <= 1e-12);
}

TEST_CASE("frft angles add") {
  const double angles[] = {0.3, 0.7, 1.1, 2.0, -0.9};
  for (double a : angles)
    for (double b : angles) {
      if (std::abs(std::sin(a + b)) < 1e-3) continue;
      CHECK(blocks_distance(compose(preset::frft(2, a), preset::frft(2, b)).blocks(),
                            preset::frft(2, a + b).blocks()) <= 1e-12);
    }
}

TEST_CASE("sigma_min agrees with an eigenvalue oracle") {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto m = random_free_symplectic(seed, 1 + static_cast<int>(seed % 2));
    worst = std::max(worst, oracle::rel_err(m.sigma_min_b(), oracle::sigma_min(m.b())));
  }
  CHECK(worst <= 1e-12);

  Matrix near(2, 2);
  near << 1e6, 1e6, 1e6, 1e6 + 1e-3;
  // B^T B eigenvalues lose the small one here; det / sigma_max does not.
  const double sigma_max = Eigen::JacobiSVD<Eigen::MatrixXd>(Eigen::MatrixXd(near)).singularValues()(0);
  CHECK(sigma_min(near) == doctest::Approx(1e3 / sigma_max).epsilon(1e-9));
}

TEST_CASE("cached quantities") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto m = random_free_symplectic(seed, 1 + static_cast<int>(seed % 2));
    const int n = m.dim();
    check_symplectic(m);
    CHECK(m.det_b() == doctest::Approx(m.b().determinant()).epsilon(1e-12));
    CHECK(max_abs(m.b_inv() * m.b() - eye(n)) <= 1e-12);
    CHECK(max_abs(m.b_inv_t() - m.b_inv().transpose()) <= 1e-15);
    CHECK(max_abs(m.d_b_inv() - m.d() * m.b().inverse()) <= 1e-12 * max_abs(m.d_b_inv()) + 1e-15);
    CHECK(max_abs(m.b_inv_a() - m.b().inverse() * m.a()) <= 1e-12 * max_abs(m.b_inv_a()) + 1e-15);
  }
}

TEST_CASE("random matrices are deterministic and moderate") {
  for (int n : {1, 2}) {
    const auto x = random_free_symplectic(11, n), y = random_free_symplectic(11, n);
    CHECK(blocks_distance(x.blocks(), y.blocks()) == 0.0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto m = random_free_symplectic(seed, n);
      CHECK(std::abs(m.det_b()) >= 0.25);
      CHECK(max_abs(m.b_inv_a()) <= 1.0);
    }
  }
}
