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

#include <string>
#include <vector>

#include "nslct/sampling.hpp"
#include "nslct/stnslct.hpp"
#include "nslct/symplectic.hpp"

namespace nslct {

/// Both sides of one inequality instance. `margin` is oriented so that a
/// non-negative value means the inequality holds.
struct UPReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;
  double margin = 0.0;
  /// Parameters and provenance of the instance (alpha, p, n, det B, ids).
  std::string inputs;
  /// Set when a printed constant had to be substituted.
  std::string note;

  /// 1e-9 * max(|lhs|, |rhs|).
  double tolerance() const;
  bool holds() const { return margin >= -tolerance(); }
};

/// Axis-aligned closed box. An empty box contains nothing.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  bool empty = false;

  static Box empty_box(int n);
  bool contains(const Vector& p) const;
};

/// Tail energies for Nazarov-style concentration: f outside S, and the gram
/// outside the region E B, i.e. cells whose B^{-1} w falls outside E.
struct ConcentrationSets {
  Box s;
  Box e;
  double f_tail = 0.0;
  double f_total = 0.0;
  double gram_tail = 0.0;
  double gram_total = 0.0;
};

/// vol * sum |x_k|^2 |f_k|^2. Throws ZeroSignal.
double dispersion_spatial(const SampledSignal& f);

/// sum_u sum_w |w|^2 |V(w, u)|^2 dw du over the warped lattice.
double dispersion_spectral(const Gram& gram);

/// sqrt(dispersion_spectral) sqrt(dispersion_spatial) against
/// n sigma_min(B) / (4 pi) ||f||^2 ||phi||. Throws ZeroSignal.
UPReport heisenberg_report(const SampledSignal& f, const WindowSpec& wspec,
                           const FreeSymplecticMatrix& m);
UPReport heisenberg_report(const SampledSignal& f, const WindowSpec& wspec,
                           const FreeSymplecticMatrix& m, const Gram& gram);

/// pi^alpha [Gamma((n - alpha)/4) / Gamma((n + alpha)/4)]^2.
double pitt_constant(int n, double alpha);

/// sum |w|^-alpha |V|^2 against C_alpha |det B|^-alpha ||phi||^2 int |x|^alpha |f|^2.
/// For alpha > 0 the w = 0 cell carries weight 0. Throws BadAlpha unless
/// 0 <= alpha < n.
UPReport pitt_report(const SampledSignal& f, const WindowSpec& wspec,
                     const FreeSymplecticMatrix& m, double alpha);
UPReport pitt_report(const SampledSignal& f, const WindowSpec& wspec,
                     const FreeSymplecticMatrix& m, const Gram& gram, double alpha);

/// sum |V|^p for unit-normalized f and phi against (2/p) |det B|^(1 - p/2).
/// Throws BadP unless 2 <= p < infinity.
UPReport lieb_report(const SampledSignal& f, const WindowSpec& wspec,
                     const FreeSymplecticMatrix& m, double p);
UPReport lieb_report(const SampledSignal& f, const WindowSpec& wspec,
                     const FreeSymplecticMatrix& m, const Gram& gram, double p);

/// ||V||_q against ||phi||_q ||f||_p with 1/p + 1/q = 1. Throws BadP unless
/// 1 <= p <= 2.
UPReport hausdorff_young_report(const SampledSignal& f, const WindowSpec& wspec,
                                const FreeSymplecticMatrix& m, double p);
UPReport hausdorff_young_report(const SampledSignal& f, const WindowSpec& wspec,
                                const FreeSymplecticMatrix& m, const Gram& gram, double p);

/// sum ln|B^{-1} w| |V|^2 + ||phi||^2 int ln|x| |f|^2 against
/// (psi(n/2) - ln pi) ||phi||^2 ||f||^2. The w = 0 and x = 0 cells carry
/// weight 0. Throws ZeroSignal.
UPReport log_report(const SampledSignal& f, const WindowSpec& wspec,
                    const FreeSymplecticMatrix& m);
UPReport log_report(const SampledSignal& f, const WindowSpec& wspec,
                    const FreeSymplecticMatrix& m, const Gram& gram);

/// Throws BadBox for malformed boxes or boxes reaching past the sampled
/// extents (S against the signal grid, E against the omega lattice).
ConcentrationSets concentration(const SampledSignal& f, const Gram& gram, const Box& s,
                                const Box& e, const FreeSymplecticMatrix& m);

}  // namespace nslct
