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

#include <string>
#include <vector>

#include "fidopt/quantum.hpp"

namespace fidopt {

/// rho - sigma = Q_plus - Q_minus with orthogonal positive parts.
struct JordanSplit {
  CMatrix q_plus;
  CMatrix q_minus;
  CMatrix pi_plus;
  CMatrix pi_minus;
  CMatrix pi_zero;
};

/// Eigenvalues of rho - sigma within the relative rank threshold count as
/// zero. Throws "states.distinct" for equal states.
JordanSplit jordan_split(const DensityOperator& rho, const DensityOperator& sigma,
                         const ToleranceConfig& tol = {});

struct TraceVerdict {
  bool is_t_optimal = false;
  bool is_minimal = false;
  double d = 0.0;
  double d_e = 0.0;
  double gap = 0.0;  // d - d_e
  std::vector<bool> elements;
  std::string diagnostic;
};

/// Each element annihilated by Q_plus or by Q_minus (relative to ||E_m||).
TraceVerdict verify_t_optimal(const Povm& e, const DensityOperator& rho,
                              const DensityOperator& sigma, const ToleranceConfig& tol = {});

/// {Pi_plus + Q0, 1 - Pi_plus - Q0} (labels T+, T-). Throws "t_optimal.q0"
/// unless Q0 is supported in Null(rho - sigma) and 0 <= Q0 <= Pi_zero.
Povm minimal_t_optimal(const DensityOperator& rho, const DensityOperator& sigma, const CMatrix& q0,
                       const ToleranceConfig& tol = {});

/// Maximum success probability (1 + D) / 2 for equiprobable priors.
double helstrom_success(const DensityOperator& rho, const DensityOperator& sigma);

}  // namespace fidopt
