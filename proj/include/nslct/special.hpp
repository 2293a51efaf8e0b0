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

namespace nslct {

/// Gamma function for x > 0. Throws DomainError otherwise.
double gamma_fn(double x);

/// Digamma psi(x) = Gamma'(x) / Gamma(x) for x > 0: upward recurrence to
/// x >= 10, then the asymptotic series through x^-14. Throws DomainError for
/// x <= 0.
double digamma_fn(double x);

}  // namespace nslct
