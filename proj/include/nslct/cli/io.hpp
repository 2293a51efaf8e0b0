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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nslct/sampling.hpp"
#include "nslct/symplectic.hpp"

// Text file formats. Every document starts with a "# nslct <kind> v1" line,
// followed by one header line of "key=value" fields separated by ';' (lists
// are comma separated, per axis or row-major), followed by the body. Numbers
// are written with 17 significant digits so doubles survive a round trip.
//
//   matrix    n=1; preset=frft; alpha=0.7853981633974483
//             n=2; A=1,0,0,1; B=...; C=...; D=...      (explicit blocks)
//   signal    n=1; N=256; delta=0.1; origin=-12.8      body: "re,im" rows
//   spectrum  ...signal grid...; warp=<B row-major>    body: "re,im" rows
//   gram      ...; warp=...; stride=1; window=<id>; A=..; B=..; C=..; D=..
//                                                      body: "u,w,re,im" rows
//   wlist     n=1                                      body: "w1[,w2]" rows
//   points    n=1                                      body: "w1[,w2],re,im"
//
// Matrix files may spread fields over several lines and carry '#' comments;
// presets are fourier, frft (alpha), fresnel (B: 1 or n^2 values) and
// separable (a, b, c, d: 1 or n values each).
//
// Malformed documents raise Error(ParseError) with the offending line number.
namespace nslct::cli {

FreeSymplecticMatrix parse_matrix(std::string_view text);
FreeSymplecticMatrix read_matrix(const std::filesystem::path& path);
std::string format_matrix(const FreeSymplecticMatrix& m);

std::string format_signal(const SampledSignal& s);
SampledSignal parse_signal(std::string_view text);

std::string format_spectrum(const Spectrum& s);
Spectrum parse_spectrum(std::string_view text);

struct GramDocument {
  Gram gram;
  std::string window_id;
  std::optional<Blocks> matrix;
};
std::string format_gram(const Gram& g, std::string_view window_id, const FreeSymplecticMatrix& m);
GramDocument parse_gram(std::string_view text);

std::vector<Vector> parse_wlist(std::string_view text);
std::string format_points(std::span<const Vector> points, std::span<const Complex> values);

/// "signal", "spectrum", "gram", ... from the leading "# nslct <kind>" line.
std::string document_kind(std::string_view text);

std::string read_text(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace nslct::cli
