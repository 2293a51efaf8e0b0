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

#include "nslct/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nslct/error.hpp"
#include "nslct/special.hpp"

namespace nslct {

namespace {

constexpr double kPi = std::numbers::pi;

// cells * sum_u sum_w weight[w] |V(w, u)|^p, sequential in storage order.
double weighted_gram_sum(const Gram& gram, const std::vector<double>& weight, double p = 2.0) {
  const std::size_t len = gram.row_length();
  double sum = 0.0;
  for (std::size_t r = 0; r < gram.rows(); ++r) {
    const Complex* row = gram.values.data() + r * len;
    for (std::size_t i = 0; i < len; ++i) {
      if (weight[i] == 0.0) continue;
      const double mag = p == 2.0 ? std::norm(row[i]) : std::pow(std::abs(row[i]), p);
      sum += weight[i] * mag;
    }
  }
  return gram.cell_volume() * sum;
}

// vol * sum_k weight(x_k) |f_k|^2.
template <typename Weight>
double weighted_signal_sum(const SampledSignal& f, Weight weight) {
  double sum = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    sum += weight(f.grid.point(k)) * std::norm(f.values[k]);
  }
  return f.grid.cell_volume() * sum;
}

void require_nonzero(const SampledSignal& f, const char* what) {
  for (const Complex& v : f.values) {
    if (v != Complex{}) return;
  }
  throw Error(ErrorKind::ZeroSignal, std::string(what) + " is identically zero");
}

void check_pair(const SampledSignal& f, const WindowSpec& wspec, const Gram& gram) {
  if (!(f.grid == gram.wgrid.signal_grid()) || !(f.grid == wspec.window().grid) ||
      gram.stride != wspec.stride()) {
    throw Error(ErrorKind::GridMismatch, "signal, window and gram do not belong together");
  }
}

std::string describe(const FreeSymplecticMatrix& m, const std::string& extra) {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << m.dim() << " detB=" << m.det_b();
  if (!extra.empty()) os << ' ' << extra;
  return os.str();
}

UPReport make_report(std::string name, double lhs, double rhs, double constant, double margin,
                     std::string inputs) {
  UPReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  r.margin = margin;
  r.inputs = std::move(inputs);
  return r;
}

}  // namespace

double UPReport::tolerance() const { return 1e-9 * std::max(std::abs(lhs), std::abs(rhs)); }

Box Box::empty_box(int n) {
  Box b;
  b.lo.assign(static_cast<std::size_t>(n), 0.0);
  b.hi.assign(static_cast<std::size_t>(n), 0.0);
  b.empty = true;
  return b;
}

bool Box::contains(const Vector& p) const {
  if (empty) return false;
  for (int j = 0; j < p.size(); ++j) {
    if (p(j) < lo[j] || p(j) > hi[j]) return false;
  }
  return true;
}

double dispersion_spatial(const SampledSignal& f) {
  require_nonzero(f, "signal");
  return weighted_signal_sum(f, [](const Vector& x) { return x.squaredNorm(); });
}

double dispersion_spectral(const Gram& gram) {
  std::vector<double> weight(gram.row_length());
  for (std::size_t i = 0; i < weight.size(); ++i) weight[i] = gram.wgrid.point(i).squaredNorm();
  return weighted_gram_sum(gram, weight);
}

UPReport heisenberg_report(const SampledSignal& f, const WindowSpec& wspec,
                           const FreeSymplecticMatrix& m) {
  require_nonzero(f, "signal");
  return heisenberg_report(f, wspec, m, stnslct_gram(f, wspec, m));
}

UPReport heisenberg_report(const SampledSignal& f, const WindowSpec& wspec,
                           const FreeSymplecticMatrix& m, const Gram& gram) {
  check_pair(f, wspec, gram);
  require_nonzero(f, "signal");
  const double lhs = std::sqrt(dispersion_spectral(gram)) * std::sqrt(dispersion_spatial(f));
  const double constant = m.dim() * m.sigma_min_b() / (4.0 * kPi);
  const double rhs = constant * inner(f, f).real() * std::sqrt(wspec.norm2());
  std::ostringstream extra;
  extra.precision(17);
  extra << "sigma_min=" << m.sigma_min_b();
  return make_report("heisenberg", lhs, rhs, constant, lhs - rhs, describe(m, extra.str()));
}

double pitt_constant(int n, double alpha) {
  if (!(alpha >= 0.0 && alpha < n)) {
    throw Error(ErrorKind::BadAlpha, "Pitt exponent must satisfy 0 <= alpha < n");
  }
  const double ratio = gamma_fn((n - alpha) / 4.0) / gamma_fn((n + alpha) / 4.0);
  return std::pow(kPi, alpha) * ratio * ratio;
}

UPReport pitt_report(const SampledSignal& f, const WindowSpec& wspec,
                     const FreeSymplecticMatrix& m, double alpha) {
  pitt_constant(m.dim(), alpha);
  return pitt_report(f, wspec, m, stnslct_gram(f, wspec, m), alpha);
}

UPReport pitt_report(const SampledSignal& f, const WindowSpec& wspec,
                     const FreeSymplecticMatrix& m, const Gram& gram, double alpha) {
  check_pair(f, wspec, gram);
  const double c_alpha = pitt_constant(m.dim(), alpha);
  std::vector<double> weight(gram.row_length());
  for (std::size_t i = 0; i < weight.size(); ++i) {
    const double r = gram.wgrid.point(i).norm();
    weight[i] = alpha == 0.0 ? 1.0 : (r > 0.0 ? std::pow(r, -alpha) : 0.0);
  }
  const double lhs = weighted_gram_sum(gram, weight);
  const double constant = c_alpha * std::pow(std::abs(m.det_b()), -alpha);
  const double moment =
      weighted_signal_sum(f, [alpha](const Vector& x) { return std::pow(x.norm(), alpha); });
  const double rhs = constant * wspec.norm2() * moment;
  std::ostringstream extra;
  extra.precision(17);
  extra << "alpha=" << alpha;
  return make_report("pitt", lhs, rhs, constant, rhs - lhs, describe(m, extra.str()));
}

UPReport lieb_report(const SampledSignal& f, const WindowSpec& wspec,
                     const FreeSymplecticMatrix& m, double p) {
  if (!(p >= 2.0) || !std::isfinite(p)) throw Error(ErrorKind::BadP, "Lieb exponent must satisfy 2 <= p < inf");
  return lieb_report(f, wspec, m, stnslct_gram(f, wspec, m), p);
}

UPReport lieb_report(const SampledSignal& f, const WindowSpec& wspec,
                     const FreeSymplecticMatrix& m, const Gram& gram, double p) {
  if (!(p >= 2.0) || !std::isfinite(p)) throw Error(ErrorKind::BadP, "Lieb exponent must satisfy 2 <= p < inf");
  check_pair(f, wspec, gram);
  require_nonzero(f, "signal");
  // V is linear in f and antilinear in phi, so normalizing the gram is the
  // same as transforming the unit-norm pair.
  const double scale = 1.0 / (lp_norm(f, 2.0) * std::sqrt(wspec.norm2()));
  const double lhs =
      std::pow(scale, p) * weighted_gram_sum(gram, std::vector<double>(gram.row_length(), 1.0), p);
  const double abs_det = std::abs(m.det_b());
  const double constant = (2.0 / p) * abs_det / std::pow(abs_det, p / 2.0);
  const double rhs = constant;

  std::ostringstream extra;
  extra.precision(17);
  extra << "p=" << p;
  UPReport r = make_report("lieb", lhs, rhs, constant, rhs - lhs, describe(m, extra.str()));
  const double det_a = m.a().determinant();
  r.note = std::abs(det_a) <= kDetTolerance
               ? "det(A)=0 leaves the printed det(A) normalization undefined; |det B| used"
               : "printed det(A) normalization replaced by |det B|";
  return r;
}

UPReport hausdorff_young_report(const SampledSignal& f, const WindowSpec& wspec,
                                const FreeSymplecticMatrix& m, double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw Error(ErrorKind::BadP, "Hausdorff-Young exponent must lie in [1, 2]");
  return hausdorff_young_report(f, wspec, m, stnslct_gram(f, wspec, m), p);
}

UPReport hausdorff_young_report(const SampledSignal& f, const WindowSpec& wspec,
                                const FreeSymplecticMatrix& m, const Gram& gram, double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw Error(ErrorKind::BadP, "Hausdorff-Young exponent must lie in [1, 2]");
  check_pair(f, wspec, gram);
  const double q = p == 1.0 ? kInfinity : p / (p - 1.0);
  const double lhs = lp_norm(gram, q);
  const double rhs = lp_norm(wspec.window(), q) * lp_norm(f, p);
  std::ostringstream extra;
  extra.precision(17);
  extra << "p=" << p << " q=" << q;
  return make_report("hausdorff_young", lhs, rhs, 1.0, rhs - lhs, describe(m, extra.str()));
}

UPReport log_report(const SampledSignal& f, const WindowSpec& wspec,
                    const FreeSymplecticMatrix& m) {
  require_nonzero(f, "signal");
  return log_report(f, wspec, m, stnslct_gram(f, wspec, m));
}

UPReport log_report(const SampledSignal& f, const WindowSpec& wspec,
                    const FreeSymplecticMatrix& m, const Gram& gram) {
  check_pair(f, wspec, gram);
  require_nonzero(f, "signal");
  // On the lattice, B^{-1} w is exactly the unwarped omega.
  std::vector<double> weight(gram.row_length());
  for (std::size_t i = 0; i < weight.size(); ++i) {
    const double r = gram.wgrid.omega(i).norm();
    weight[i] = r > 0.0 ? std::log(r) : 0.0;
  }
  const double spectral = weighted_gram_sum(gram, weight);
  const double spatial = weighted_signal_sum(f, [](const Vector& x) {
    const double r = x.norm();
    return r > 0.0 ? std::log(r) : 0.0;
  });
  const double lhs = spectral + wspec.norm2() * spatial;
  const double constant = digamma_fn(m.dim() / 2.0) - std::log(kPi);
  const double rhs = constant * wspec.norm2() * inner(f, f).real();
  return make_report("logarithmic", lhs, rhs, constant, lhs - rhs, describe(m, ""));
}

ConcentrationSets concentration(const SampledSignal& f, const Gram& gram, const Box& s,
                                const Box& e, const FreeSymplecticMatrix& m) {
  const int n = f.grid.dim();
  if (!(f.grid == gram.wgrid.signal_grid()) || m.dim() != n) {
    throw Error(ErrorKind::GridMismatch, "signal, gram and matrix do not belong together");
  }
  auto check_box = [n](const Box& b, const char* which, auto lower, auto upper) {
    if (b.lo.size() != static_cast<std::size_t>(n) || b.hi.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::BadBox, std::string(which) + " has the wrong dimension");
    }
    if (b.empty) return;
    for (int j = 0; j < n; ++j) {
      const double lo = b.lo[j], hi = b.hi[j];
      if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw Error(ErrorKind::BadBox, std::string(which) + " bounds are not finite and ordered");
      }
      const double slack = 1e-12 * std::max({1.0, std::abs(lower(j)), std::abs(upper(j))});
      if (lo < lower(j) - slack || hi > upper(j) + slack) {
        throw Error(ErrorKind::BadBox, std::string(which) + " reaches past the sampled extent");
      }
    }
  };
  const Grid& g = f.grid;
  const WarpedGrid& wg = gram.wgrid;
  check_box(s, "S", [&](int j) { return g.origin(j); }, [&](int j) { return g.extent_end(j); });
  check_box(
      e, "E",
      [&](int j) { return -0.5 * static_cast<double>(g.count(j)) * wg.omega_step(j); },
      [&](int j) { return 0.5 * static_cast<double>(g.count(j)) * wg.omega_step(j); });

  ConcentrationSets out;
  out.s = s;
  out.e = e;
  out.f_total = weighted_signal_sum(f, [](const Vector&) { return 1.0; });
  out.f_tail = weighted_signal_sum(f, [&](const Vector& x) { return s.contains(x) ? 0.0 : 1.0; });

  std::vector<double> all(gram.row_length(), 1.0), outside(gram.row_length());
  for (std::size_t i = 0; i < outside.size(); ++i) {
    outside[i] = e.contains(wg.omega(i)) ? 0.0 : 1.0;
  }
  out.gram_total = weighted_gram_sum(gram, all);
  out.gram_tail = weighted_gram_sum(gram, outside);
  return out;
}

}  // namespace nslct
