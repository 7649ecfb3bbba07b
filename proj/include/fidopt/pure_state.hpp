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
#include <vector>

#include "fidopt/pencil.hpp"
#include "fidopt/quantum.hpp"

namespace fidopt {

using BlochVector = Eigen::Vector3d;

/// (tr(rho X), tr(rho Y), tr(rho Z)) of a qubit operator.
BlochVector bloch_vector(const CMatrix& rho);
/// (I + x X + y Y + z Z) / 2; throws "bloch.unit" unless |p| = 1 within 1e-10.
CMatrix pure_state_from_bloch(const BlochVector& p);

/// Great-circle arc N -> A -> B -> M, with A, B the Bloch points of rho and
/// sigma and M = -A, N = -B.
struct ArcSpec {
  BlochVector a, b, m, n;
  BlochVector normal;  // a x b, normalized
  BlochVector e1, e2;  // in-plane frame: e1 = a, e2 completes it towards b
  double theta_b = 0.0;

  /// Signed angle of the projection of p onto the arc plane, in (-pi, pi];
  /// A sits at 0, B at theta_b, M at pi and N at theta_b - pi.
  double angle(const BlochVector& p) const;
};

/// Throws "arc.degenerate" when a = ±b.
ArcSpec make_arc(const BlochVector& a, const BlochVector& b);
ArcSpec make_arc(const DensityOperator& rho, const DensityOperator& sigma);

/// |p . normal| <= tol and the angle lies on the closed arc from N through
/// A, B to M (within tol).
bool on_major_arc(const BlochVector& p, const ArcSpec& arc, double tol);

/// Weights w_i >= 0 with sum_i w_i (I + p_i . sigma) / 2 = I by least
/// squares; throws "arc.off_arc" or "arc.infeasible" (message carries the
/// residual). Labels a0, a1, ...
Povm arc_povm(const std::vector<BlochVector>& points, const ArcSpec& arc, double tol,
              const ToleranceConfig& cfg = {});

/// Eigenstructure of (Pi_rho sigma, Pi_rho). Requires sigma pure
/// ("pure.sigma") and rho sigma != 0 ("pure.orthogonal").
PencilEigensystem pure_pencil_eigensystem(const DensityOperator& rho,
                                          const DensityOperator& sigma,
                                          const ToleranceConfig& tol = {});

/// Projector onto Null(Pi_rho sigma - lambda Pi_rho); nullopt is Null(Pi_rho).
CMatrix pure_pencil_eigenprojector(const CMatrix& pi_rho, const CMatrix& sigma,
                                   std::optional<double> lambda, const ToleranceConfig& tol = {});

struct PureCriterionResult {
  bool optimal = false;
  std::vector<ParallelResult> elements;
};

/// Every element supported in an eigenspace of (Pi_rho sigma, Pi_rho) with a
/// nonnegative eigenvalue: Pi_rho sigma sqrt(E) = k Pi_rho sqrt(E), k >= 0.
PureCriterionResult pure_criterion(const Povm& e, const DensityOperator& rho,
                                   const DensityOperator& sigma, const ToleranceConfig& tol = {});

/// Two-dimensional reduction for pure sigma and rank(rho) >= 2.
struct PureMixedReduction {
  CMatrix basis;         // d x 2, orthonormal basis of Null(rho) + supp(sigma)
  CMatrix pi2;           // basis basis^dagger
  CMatrix varrho_full;   // Pi_2 Pi_rho Pi_2
  DensityOperator varrho;  // varrho on the 2-dim subspace
  DensityOperator sigma2;  // sigma on the 2-dim subspace
};

/// Throws "pure.reduction" when sigma is not pure, rank(rho) < 2, sigma
/// commutes with Pi_rho, or rho + sigma is singular.
PureMixedReduction reduce_pure_mixed(const DensityOperator& rho, const DensityOperator& sigma,
                                     const ToleranceConfig& tol = {});

/// Embeds a POVM on the 2-dim subspace, adjoins 1 - Pi_2 (label "V0") and
/// merges elements supported in Null(sigma).
Povm lift_reduced_povm(const Povm& reduced, const PureMixedReduction& r,
                       const DensityOperator& sigma, const ToleranceConfig& tol = {});

/// Compresses a POVM to the 2-dim subspace and drops zero elements.
Povm compress_to_reduced(const Povm& e, const PureMixedReduction& r,
                         const ToleranceConfig& tol = {});

}  // namespace fidopt
