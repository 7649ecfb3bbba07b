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

#include "fidopt/quantum.hpp"

namespace fidopt {

/// Squared Bhattacharyya coefficient. Distributions must carry the same
/// number of outcomes.
double classical_fidelity(const OutcomeDistribution& p, const OutcomeDistribution& q);
double bhattacharyya(const OutcomeDistribution& p, const OutcomeDistribution& q);
double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// (sum of singular values of sqrt(rho) sqrt(sigma))^2, clipped to [0,1].
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);
/// Half the trace norm of rho - sigma.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

double induced_fidelity(const Povm& e, const DensityOperator& rho, const DensityOperator& sigma);
double induced_trace_distance(const Povm& e, const DensityOperator& rho,
                              const DensityOperator& sigma);

struct InducedValues {
  std::string name;
  double f = 0.0;
  double d = 0.0;
};

struct DivergenceReport {
  double f = 0.0;
  double d = 0.0;
  double fvdg_lower = 0.0;  // 1 - sqrt(F)
  double fvdg_upper = 0.0;  // sqrt(1 - F)
  std::vector<InducedValues> induced;

  bool fvdg_holds(double slack = 1e-9) const {
    return fvdg_lower <= d + slack && d <= fvdg_upper + slack;
  }
};

DivergenceReport divergence_report(const DensityOperator& rho, const DensityOperator& sigma);

}  // namespace fidopt
