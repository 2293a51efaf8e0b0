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

#include "nslct/cli/suite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "nslct/error.hpp"
#include "nslct/nslct.hpp"
#include "nslct/stnslct.hpp"

namespace nslct::cli {

namespace {

constexpr std::array<std::string_view, 9> kNames = {
    "all", "parseval", "moyal", "bounded", "heisenberg", "pitt", "lieb", "hy", "log"};

constexpr double kParsevalTol = 1e-8;
constexpr double kEnergyTol = 1e-6;
constexpr double kCrossTol = 1e-8;
constexpr double kEndpointTol = 1e-6;

struct Instance {
  std::size_t index;
  SampledSignal f;
  std::optional<WindowSpec> window;
  std::optional<FreeSymplecticMatrix> matrix;
  std::string label;
  double sigma = 1.0;
  std::vector<double> center;
};

FreeSymplecticMatrix instance_matrix(std::size_t i, int n, std::uint64_t draw,
                                     std::string& label) {
  if (i % 4 != 0) {
    label = "matrix=random";
    return random_free_symplectic(draw, n);
  }
  switch ((i / 4) % 4) {
    case 0:
      label = "matrix=fourier";
      return preset::fourier(n);
    case 1:
      label = "matrix=frft(0.7)";
      return preset::frft(n, 0.7);
    case 2:
      label = "matrix=fresnel(1.5)";
      return preset::fresnel(n, 1.5);
    default:
      label = "matrix=separable(1.25,0.8,0,0.8)";
      return preset::separable(n, 1.25, 0.8, 0.0, 0.8);
  }
}

Instance make_instance(std::uint64_t seed, std::size_t i) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + i);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };

  const int n = i % 6 == 5 ? 2 : 1;
  const Grid grid = n == 1 ? Grid::centered(1, 256, 0.1) : Grid::centered(2, 64, 0.25);
  const std::size_t stride = n == 1 ? 1 : 2;

  SynthParams p;
  for (int j = 0; j < n; ++j) p.center.push_back(uniform(-1.0, 1.0));
  p.seed = rng();
  std::string kind;
  SignalKind sk = SignalKind::Gaussian;
  switch (i % 3) {
    case 0:
      sk = SignalKind::Gaussian;
      kind = "gaussian";
      p.sigma = uniform(0.7, 1.4);
      break;
    case 1:
      sk = SignalKind::Chirp;
      kind = "chirp";
      p.freq = uniform(-2.0, 2.0);
      p.rate = uniform(-0.5, 0.5);
      p.envelope = uniform(0.8, 1.5);
      break;
    default:
      sk = SignalKind::Noise;
      kind = "noise";
      p.sigma = uniform(0.8, 1.5);
      break;
  }
  SynthParams wp;
  wp.sigma = uniform(n == 1 ? 0.6 : 0.8, 1.5);
  const std::uint64_t matrix_draw = rng();

  Instance inst{i, synthesize(sk, grid, p), std::nullopt, std::nullopt, "", p.sigma, p.center};
  inst.window.emplace(synthesize(SignalKind::Gaussian, grid, wp), stride);
  std::string mlabel;
  inst.matrix.emplace(instance_matrix(i, n, matrix_draw, mlabel));
  std::ostringstream os;
  os.precision(6);
  os << "signal=" << kind << " window_sigma=" << wp.sigma << ' ' << mlabel;
  inst.label = os.str();
  return inst;
}

UPReport equality_report(std::string name, double lhs, double rhs, std::string inputs) {
  UPReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = 1.0;
  r.margin = rhs - lhs;
  r.inputs = std::move(inputs);
  return r;
}

bool within(const UPReport& r, double rel) { return std::abs(r.margin) <= rel * std::abs(r.rhs); }

class Runner {
 public:
  Runner(std::string_view suite, std::uint64_t seed) : suite_(suite), seed_(seed) {}

  std::vector<SuiteRow> run(std::size_t i) {
    inst_ = std::make_unique<Instance>(make_instance(seed_, i));
    gram_.reset();
    rows_.clear();
    if (wants("parseval")) parseval();
    if (wants("moyal")) moyal_family();
    if (wants("bounded")) bounded();
    if (wants("heisenberg")) add("heisenberg", heisenberg_report(f(), w(), m(), gram()));
    if (wants("pitt")) {
      const UPReport r0 = pitt_report(f(), w(), m(), gram(), 0.0);
      add("pitt", r0, r0.holds() && within(r0, kEndpointTol));
      add("pitt", pitt_report(f(), w(), m(), gram(), 0.5));
    }
    if (wants("lieb")) {
      const UPReport r2 = lieb_report(f(), w(), m(), gram(), 2.0);
      add("lieb", r2, r2.holds() && within(r2, kEndpointTol));
      add("lieb", lieb_report(f(), w(), m(), gram(), 4.0));
    }
    if (wants("hy")) {
      add("hy", hausdorff_young_report(f(), w(), m(), gram(), 1.0));
      add("hy", hausdorff_young_report(f(), w(), m(), gram(), 1.5));
      const UPReport r2 = hausdorff_young_report(f(), w(), m(), gram(), 2.0);
      add("hy", r2, r2.holds() && within(r2, kEndpointTol));
    }
    if (wants("log")) add("log", log_report(f(), w(), m(), gram()));
    return std::move(rows_);
  }

 private:
  bool wants(std::string_view family) const { return suite_ == "all" || suite_ == family; }
  const SampledSignal& f() const { return inst_->f; }
  const WindowSpec& w() const { return *inst_->window; }
  const FreeSymplecticMatrix& m() const { return *inst_->matrix; }
  const Gram& gram() {
    if (!gram_) gram_ = std::make_unique<Gram>(stnslct_gram(f(), w(), m()));
    return *gram_;
  }

  void add(const std::string& family, UPReport r, std::optional<bool> pass = std::nullopt) {
    r.inputs += ' ' + inst_->label;
    const bool ok = pass.value_or(r.holds());
    rows_.push_back({family, inst_->index, std::move(r), ok});
  }

  void parseval() {
    const Spectrum s = nslct_fast(f(), m());
    const UPReport r = equality_report("parseval", lp_norm(s, 2.0), lp_norm(f(), 2.0),
                                       "n=" + std::to_string(m().dim()));
    add("parseval", r, within(r, kParsevalTol));
  }

  void moyal_family() {
    const double energy = inner(f(), f()).real() * w().norm2();
    const UPReport r = equality_report("moyal_energy", moyal(gram(), gram()).real(), energy,
                                       "n=" + std::to_string(m().dim()));
    add("moyal", r, within(r, kEnergyTol));
    if (inst_->index % 3 != 0) return;
    // Even and odd Gaussians about the same centre are orthogonal.
    SynthParams p;
    p.sigma = inst_->sigma;
    p.center = inst_->center;
    const SampledSignal odd = synthesize(SignalKind::OddGaussian, f().grid, p);
    const Gram odd_gram = stnslct_gram(odd, w(), m());
    UPReport c;
    c.name = "moyal_cross";
    c.lhs = std::abs(moyal(gram(), odd_gram));
    c.rhs = std::sqrt(moyal(gram(), gram()).real() * moyal(odd_gram, odd_gram).real());
    c.constant = kCrossTol;
    c.margin = kCrossTol * c.rhs - c.lhs;
    c.inputs = "n=" + std::to_string(m().dim());
    add("moyal", c, c.margin >= 0.0);
  }

  void bounded() {
    const double margin = boundedness_margin(gram(), f(), w(), m());
    const double sup = lp_norm(gram(), kInfinity);
    UPReport r = equality_report("bounded", sup, sup + margin, "n=" + std::to_string(m().dim()));
    r.constant = std::pow(2.0 * std::numbers::pi, -0.5 * m().dim()) /
                 std::sqrt(std::abs(m().det_b()));
    add("bounded", r, r.lhs <= r.rhs * (1.0 + 1e-9));
  }

  std::string suite_;
  std::uint64_t seed_;
  std::unique_ptr<Instance> inst_;
  std::unique_ptr<Gram> gram_;
  std::vector<SuiteRow> rows_;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kNames; }

bool is_suite_name(std::string_view name) {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

bool SuiteResult::passed() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
}

std::vector<std::string> SuiteResult::families() const {
  std::vector<std::string> out;
  for (const SuiteRow& r : rows) {
    if (std::find(out.begin(), out.end(), r.family) == out.end()) out.push_back(r.family);
  }
  return out;
}

SuiteResult run_suite(std::string_view suite, std::uint64_t seed) {
  if (!is_suite_name(suite)) {
    throw Error(ErrorKind::BadParam, "unknown suite '" + std::string(suite) + "'");
  }
  SuiteResult result{std::string(suite), seed, {}};
  Runner runner(suite, seed);
  for (std::size_t i = 0; i < kSuiteInstances; ++i) {
    auto rows = runner.run(i);
    for (auto& r : rows) result.rows.push_back(std::move(r));
  }
  return result;
}

std::string format_report(const SuiteResult& result) {
  std::string out = "# nslct report v1; suite=" + result.suite +
                    "; seed=" + std::to_string(result.seed) + "\n";
  out += "family,name,instance,inputs,lhs,rhs,constant,margin,pass\n";
  for (const SuiteRow& row : result.rows) {
    const UPReport& r = row.report;
    out += row.family + ',' + r.name + ',' + std::to_string(row.instance) + ',' + r.inputs + ',' +
           fmt(r.lhs) + ',' + fmt(r.rhs) + ',' + fmt(r.constant) + ',' + fmt(r.margin) + ',' +
           (row.pass ? "1" : "0") + '\n';
  }
  return out;
}

std::string summarize(const SuiteResult& result) {
  std::ostringstream os;
  for (const std::string& family : result.families()) {
    std::size_t total = 0, passed = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const SuiteRow& row : result.rows) {
      if (row.family != family) continue;
      ++total;
      passed += row.pass ? 1 : 0;
      const double scale = std::max(std::abs(row.report.lhs), std::abs(row.report.rhs));
      if (scale > 0.0) worst = std::min(worst, row.report.margin / scale);
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-11s %3zu/%-3zu  min relative margin %+.3e\n",
                  family.c_str(), passed, total, worst);
    os << line;
  }
  os << (result.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace nslct::cli
