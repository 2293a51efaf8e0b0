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

#include "nslct/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace nslct {

namespace {

struct PlanCache {
  std::mutex mutex;  // the FFTW planner is not re-entrant
  std::map<std::pair<std::vector<int>, int>, fftw_plan> plans;

  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

FftPlan::FftPlan(std::span<const std::size_t> dims, Direction direction) {
  std::vector<int> n(dims.begin(), dims.end());
  size_ = 1;
  for (std::size_t d : dims) size_ *= d;
  const int sign = direction == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;

  auto& c = cache();
  std::lock_guard lock(c.mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = c.plans.find(key); it != c.plans.end()) {
    plan_ = it->second;
    return;
  }
  // FFTW_ESTIMATE leaves the arrays untouched and is deterministic;
  // FFTW_UNALIGNED lets execute() run on any std::vector storage.
  std::vector<std::complex<double>> in(size_), out(size_);
  fftw_plan plan = fftw_plan_dft(static_cast<int>(n.size()), n.data(),
                                 reinterpret_cast<fftw_complex*>(in.data()),
                                 reinterpret_cast<fftw_complex*>(out.data()), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan == nullptr) throw std::runtime_error("FFTW failed to create a plan");
  c.plans.emplace(std::move(key), plan);
  plan_ = plan;
}

void FftPlan::execute(std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out) const {
  if (in.size() != size_ || out.size() != size_) {
    throw std::invalid_argument("FftPlan::execute: buffer size mismatch");
  }
  // fftw_execute_dft does not write to its input for out-of-place plans.
  auto* src = const_cast<fftw_complex*>(reinterpret_cast<const fftw_complex*>(in.data()));
  fftw_execute_dft(static_cast<fftw_plan>(plan_), src, reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace nslct
