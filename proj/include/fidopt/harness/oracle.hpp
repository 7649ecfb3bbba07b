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

#include <vector>

#include "fidopt/harness/random.hpp"
#include "fidopt/pure_state.hpp"

namespace fidopt::harness {

/// One projective qubit measurement {|n><n|, |-n><-n|}.
struct GridPoint {
  BlochVector n;
  double f = 0.0;  // induced classical fidelity
  double d = 0.0;  // induced trace distance
};

struct OracleReport {
  double best_f = 1.0;  // smallest induced fidelity seen
  double best_d = 0.0;  // largest induced trace distance seen
  double exact_f = 0.0;
  double exact_d = 0.0;
  std::size_t evaluated = 0;

  double f_gap() const { return best_f - exact_f; }
  double d_gap() const { return exact_d - best_d; }
};

/// n x n grid over polar angle theta = pi i / (n - 1) and azimuth
/// phi = 2 pi j / n, evaluated from Bloch vectors (qubits only).
std::vector<GridPoint> qubit_grid(const DensityOperator& rho, const DensityOperator& sigma,
                                  std::size_t n);
OracleReport qubit_grid_oracle(const DensityOperator& rho, const DensityOperator& sigma,
                               std::size_t n);

/// k random POVMs with between 2 and d + 2 outcomes.
OracleReport random_povm_oracle(const DensityOperator& rho, const DensityOperator& sigma,
                                std::size_t k, std::uint64_t seed,
                                const ToleranceConfig& tol = {});

}  // namespace fidopt::harness
