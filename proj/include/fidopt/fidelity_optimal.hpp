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

#include <optional>
#include <string>
#include <vector>

#include "fidopt/pencil.hpp"
#include "fidopt/quantum.hpp"

namespace fidopt {

struct ElementVerdict {
  std::string label;
  bool parallel = false;
  std::optional<double> kappa;  // nullopt with parallel = true: infinite eigenvalue
  double residual = 0.0;
};

struct OptimalityVerdict {
  bool is_f_optimal = false;
  bool is_simple = false;
  bool is_minimal = false;
  double f = 0.0;    // F(rho, sigma)
  double f_e = 0.0;  // induced classical fidelity
  double gap = 0.0;  // f_e - f
  std::vector<ElementVerdict> elements;
  /// Pairs (i, j) whose sum still passes the parallel test.
  std::vector<std::pair<std::size_t, std::size_t>> mergeable_pairs;
  /// Non-empty when the structural verdict says optimal but the numeric gap
  /// exceeds 10 * opt_tol.
  std::string diagnostic;
};

/// Canonical PVM M(rho, sigma): eigenprojectors of M(rho^+, sigma) with
/// positive eigenvalue (descending, labels P0, P1, ...), then
/// Pi_rho - Pi_{rho,sigma} (label R) and 1 - Pi_rho (label N), rank-zero
/// elements omitted. Requires distinct states and nonsingular rho + sigma.
Povm build_canonical_pvm(const DensityOperator& rho, const DensityOperator& sigma,
                         const ToleranceConfig& tol = {});

/// Parallel test per element with the canonical U, plus the pairwise merge
/// test for minimality. Works for singular rho + sigma as well.
OptimalityVerdict verify_f_optimal(const Povm& e, const DensityOperator& rho,
                                   const DensityOperator& sigma, const ToleranceConfig& tol = {});

/// Merges elements lying in a common pencil eigenspace (pairwise parallel
/// test on sums, closed transitively). Yields the minimal coarse graining of
/// an F-optimal POVM.
Povm merge_by_eigenspace(const std::vector<PovmElement>& elements, const DensityOperator& rho,
                         const DensityOperator& sigma, const ToleranceConfig& tol = {});

/// Minimal F-optimal coarse graining of p E1 ⊔ (1-p) E2. Labels carry an
/// "a." / "b." prefix for the two sources.
Povm mixing_family(const Povm& e1, const Povm& e2, double p, const DensityOperator& rho,
                   const DensityOperator& sigma, const ToleranceConfig& tol = {});

struct DichotomyReport {
  bool weak_commutativity = false;
  bool commuting_flag = false;
  Compatibility compatibility = Compatibility::kUndecided;
  bool equivalent_flag = false;
  bool unique_minimal = false;
  Povm m_rho_sigma;
  Povm m_sigma_rho;

  bool compatible_flag() const { return compatibility == Compatibility::kCompatible; }
  /// All five statements agree.
  bool unanimous() const {
    const bool w = weak_commutativity;
    return commuting_flag == w && compatible_flag() == w && equivalent_flag == w &&
           unique_minimal == w;
  }
};

/// Evaluates the five statements independently. The uniqueness statement is
/// decided by merging (M(rho,sigma) ⊔ M(sigma,rho))/2 by eigenspace and
/// comparing the result with M(rho,sigma).
DichotomyReport classify_dichotomy(const DensityOperator& rho, const DensityOperator& sigma,
                                   const ToleranceConfig& tol = {});

/// Both states and a POVM re-expressed on supp(rho + sigma).
struct RestrictedStates {
  CMatrix basis;   // d x k, orthonormal columns spanning supp(rho + sigma)
  CMatrix gamma0;  // projector onto Null(rho + sigma)
  DensityOperator rho;
  DensityOperator sigma;
};

RestrictedStates restrict_states(const DensityOperator& rho, const DensityOperator& sigma,
                                 const ToleranceConfig& tol = {});

/// Q^dagger E_m Q for every element, labels kept, zero elements kept.
Povm restrict_povm(const Povm& e, const CMatrix& basis, const ToleranceConfig& tol = {});

struct RestrictedProblem {
  RestrictedStates states;
  Povm povm;
};

RestrictedProblem restrict_to_joint_support(const Povm& e, const DensityOperator& rho,
                                            const DensityOperator& sigma,
                                            const ToleranceConfig& tol = {});

/// {Q C_j Q^dagger + a_j Gamma_0}_j for a probability vector a.
Povm extend_with_null_weights(const Povm& c, const RestrictedStates& r,
                              const std::vector<double>& weights,
                              const ToleranceConfig& tol = {});

}  // namespace fidopt
