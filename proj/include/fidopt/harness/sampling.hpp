// Copyright 2026 The fidopt Authors
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

#include "fidopt/quantum.hpp"

namespace fidopt::harness {

/// Empirical estimates from `shots` draws of each of two outcome
/// distributions.
struct SampleReport {
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  double bc_exact = 0.0;
  double bc_hat = 0.0;
  double bc_se = 0.0;
  double tv_exact = 0.0;
  double tv_hat = 0.0;
  double tv_se = 0.0;

  double bc_z() const { return bc_se > 0.0 ? (bc_hat - bc_exact) / bc_se : 0.0; }
  double tv_z() const { return tv_se > 0.0 ? (tv_hat - tv_exact) / tv_se : 0.0; }
};

/// Plug-in standard errors from the delta method:
/// Var(BC) ~ (1 - BC^2) / (2n), Var(TV) ~ (2 - (s.p)^2 - (s.q)^2) / (4n) with
/// s the sign vector of p - q.
SampleReport sample_outcomes(const OutcomeDistribution& p, const OutcomeDistribution& q,
                             std::size_t shots, std::uint64_t seed);

SampleReport sample_measurement(const Povm& e, const DensityOperator& rho,
                                const DensityOperator& sigma, std::size_t shots,
                                std::uint64_t seed);

}  // namespace fidopt::harness
