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

#include "nslct/cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <vector>

#include "nslct/cli/io.hpp"
#include "nslct/cli/suite.hpp"
#include "nslct/nslct.hpp"
#include "nslct/stnslct.hpp"

namespace nslct::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::BadParam:
      return kExitUsage;
    case ErrorKind::SymplecticViolation:
    case ErrorKind::SingularB:
    case ErrorKind::DimensionError:
    case ErrorKind::GridMismatch:
      return kExitValidation;
    case ErrorKind::CoverageError:
    case ErrorKind::ZeroSignal:
    case ErrorKind::BadAlpha:
    case ErrorKind::BadP:
    case ErrorKind::BadBox:
    case ErrorKind::DomainError:
      return kExitNumeric;
  }
  return kExitNumeric;
}

namespace {

// Re-raises errors from a file with the path in front of the detail.
template <typename Fn>
auto load(const std::string& path, Fn parse) {
  try {
    return parse(read_text(path));
  } catch (const Error& e) {
    std::string detail = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (detail.starts_with(prefix)) detail.erase(0, prefix.size());
    throw Error(e.kind(), path + ": " + detail);
  }
}

SampledSignal load_signal(const std::string& path) { return load(path, parse_signal); }
FreeSymplecticMatrix load_matrix(const std::string& path) { return load(path, parse_matrix); }

struct TransformOptions {
  std::string signal, matrix, method = "fast", wlist, out;
};
struct GramOptions {
  std::string signal, window, matrix, out;
  std::size_t stride = 1;
};
struct InvertOptions {
  std::string input, window, matrix, out, reference, mode = "partition";
};
struct VerifyOptions {
  std::string suite;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_transform(const TransformOptions& o, std::ostream& out) {
  const SampledSignal f = load_signal(o.signal);
  const FreeSymplecticMatrix m = load_matrix(o.matrix);
  if (f.grid.dim() != m.dim()) {
    throw Error(ErrorKind::DimensionError, "signal and matrix dimensions differ");
  }
  if (!o.wlist.empty()) {
    if (o.method != "direct") throw Error(ErrorKind::BadParam, "--wlist requires --method direct");
    const std::vector<Vector> points = load(o.wlist, parse_wlist);
    for (const Vector& w : points) {
      if (w.size() != m.dim()) throw Error(ErrorKind::DimensionError, "w-list dimension differs");
    }
    const std::vector<Complex> values = nslct_direct(f, m, points);
    write_atomic(o.out, format_points(points, values));
    out << "wrote " << points.size() << " points to " << o.out << '\n';
    return kExitOk;
  }
  Spectrum s = [&] {
    if (o.method == "fast") return nslct_fast(f, m);
    const WarpedGrid wgrid(f.grid, m.b());
    std::vector<Vector> points(wgrid.size());
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = wgrid.point(i);
    return Spectrum(wgrid, nslct_direct(f, m, points));
  }();
  write_atomic(o.out, format_spectrum(s));
  out << "wrote spectrum (" << s.values.size() << " samples) to " << o.out << '\n';
  return kExitOk;
}

int cmd_gram(const GramOptions& o, std::ostream& out) {
  const SampledSignal f = load_signal(o.signal);
  const SampledSignal window = load_signal(o.window);
  const FreeSymplecticMatrix m = load_matrix(o.matrix);
  if (f.grid.dim() != m.dim()) {
    throw Error(ErrorKind::DimensionError, "signal and matrix dimensions differ");
  }
  const WindowSpec wspec(window, o.stride);
  const Gram g = stnslct_gram(f, wspec, m);
  write_atomic(o.out, format_gram(g, std::filesystem::path(o.window).filename().string(), m));
  out << "wrote gram (" << g.rows() << " x " << g.row_length() << ") to " << o.out << '\n';
  return kExitOk;
}

int cmd_invert(const InvertOptions& o, std::ostream& out) {
  const FreeSymplecticMatrix m = load_matrix(o.matrix);
  const std::string text = read_text(o.input);
  const std::string kind = document_kind(text);
  std::optional<SampledSignal> result;
  if (kind == "spectrum") {
    const Spectrum s = load(o.input, parse_spectrum);
    result.emplace(nslct_inverse(s, m));
  } else if (kind == "gram") {
    if (o.window.empty()) throw Error(ErrorKind::BadParam, "gram inversion needs --window");
    const GramDocument doc = load(o.input, parse_gram);
    if (doc.matrix) {
      const Blocks& b = *doc.matrix;
      const double scale = std::max({1.0, max_abs(m.a()), max_abs(m.b()), max_abs(m.c()),
                                     max_abs(m.d())});
      if (b.a.rows() != m.dim() || max_abs(b.a - m.a()) > 1e-12 * scale ||
          max_abs(b.b - m.b()) > 1e-12 * scale || max_abs(b.c - m.c()) > 1e-12 * scale ||
          max_abs(b.d - m.d()) > 1e-12 * scale) {
        throw Error(ErrorKind::GridMismatch, "gram was computed with a different matrix");
      }
    }
    const WindowSpec wspec(load_signal(o.window), doc.gram.stride);
    const auto mode = o.mode == "constant" ? ReconstructionMode::ConstantNorm
                                           : ReconstructionMode::PartitionOfUnity;
    result.emplace(stnslct_reconstruct(doc.gram, wspec, m, mode));
  } else {
    throw Error(ErrorKind::ParseError,
                o.input + ": line 1: expected a spectrum or gram document");
  }
  write_atomic(o.out, format_signal(*result));
  out << "wrote signal to " << o.out << '\n';
  if (!o.reference.empty()) {
    const SampledSignal ref = load_signal(o.reference);
    if (!(ref.grid == result->grid)) {
      throw Error(ErrorKind::GridMismatch, "reference grid differs from the reconstruction");
    }
    double diff = 0.0, norm = 0.0;
    for (std::size_t k = 0; k < ref.values.size(); ++k) {
      diff += std::norm(result->values[k] - ref.values[k]);
      norm += std::norm(ref.values[k]);
    }
    char line[64];
    std::snprintf(line, sizeof line, "relative L2 residual: %.6e\n",
                  norm > 0.0 ? std::sqrt(diff / norm) : std::sqrt(diff));
    out << line;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (!is_suite_name(o.suite)) {
    throw Error(ErrorKind::BadParam, "unknown suite '" + o.suite + "'");
  }
  const SuiteResult result = run_suite(o.suite, o.seed);
  if (!o.out.empty()) write_atomic(o.out, format_report(result));
  out << summarize(result);
  return result.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-separable linear canonical transforms", "nslct"};
  app.require_subcommand(1);

  TransformOptions topt;
  auto* transform = app.add_subcommand("transform", "Transform a signal file");
  transform->add_option("--signal", topt.signal, "Signal file")->required();
  transform->add_option("--matrix", topt.matrix, "Matrix file")->required();
  transform->add_option("--method", topt.method, "fast or direct")
      ->check(CLI::IsMember({"fast", "direct"}));
  transform->add_option("--wlist", topt.wlist, "Output points for the direct method");
  transform->add_option("--out", topt.out, "Output file")->required();

  GramOptions gopt;
  auto* gram = app.add_subcommand("gram", "Short-time transform of a signal");
  gram->add_option("--signal", gopt.signal, "Signal file")->required();
  gram->add_option("--window", gopt.window, "Window file")->required();
  gram->add_option("--matrix", gopt.matrix, "Matrix file")->required();
  gram->add_option("--stride", gopt.stride, "Shift stride in samples");
  gram->add_option("--out", gopt.out, "Output file")->required();

  InvertOptions iopt;
  auto* invert = app.add_subcommand("invert", "Invert a spectrum or gram file");
  invert->add_option("--input", iopt.input, "Spectrum or gram file")->required();
  invert->add_option("--window", iopt.window, "Window file (gram input)");
  invert->add_option("--matrix", iopt.matrix, "Matrix file")->required();
  invert->add_option("--out", iopt.out, "Output signal file")->required();
  invert->add_option("--reference", iopt.reference, "Signal to report the residual against");
  invert->add_option("--mode", iopt.mode, "partition or constant")
      ->check(CLI::IsMember({"partition", "constant"}));

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the seeded inequality suite");
  verify->add_option("suite", vopt.suite, "all, parseval, moyal, bounded, heisenberg, pitt, lieb, hy or log")
      ->required();
  verify->add_option("--seed", vopt.seed, "Seed");
  verify->add_option("--out", vopt.out, "Report file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*transform) return cmd_transform(topt, out);
    if (*gram) return cmd_gram(gopt, out);
    if (*invert) return cmd_invert(iopt, out);
    return cmd_verify(vopt, out);
  } catch (const Error& e) {
    err << "nslct: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "nslct: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace nslct::cli
