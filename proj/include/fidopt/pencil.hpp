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

#include "fidopt/quantum.hpp"

namespace fidopt {

/// Unitary U with sqrt(rho) sqrt(sigma) U = sqrt(sqrt(rho) sigma sqrt(rho)),
/// built from a full SVD sqrt(rho) sqrt(sigma) = W S V^dagger as U = V W^dagger.
struct PolarUnitary {
  CMatrix u;
  CMatrix w;
  CMatrix v;
  RVector singular_values;
  Index rank = 0;        // number of positive singular values
  bool aligned = false;  // zero-singular-value columns aligned with Null(rho)/supp(sigma)
};

/// Requires rho + sigma nonsingular ("pencil.singular_sum" otherwise).
PolarUnitary construct_polar_unitary(const DensityOperator& rho, const DensityOperator& sigma,
                                     const ToleranceConfig& tol = {});

/// Same construction without the nonsingularity requirement. The polar
/// relation holds for any pair; only the eigenspace guarantees need it.
PolarUnitary polar_unitary_any(const DensityOperator& rho, const DensityOperator& sigma,
                               const ToleranceConfig& tol = {});

/// ||sqrt(rho) sqrt(sigma) U - sqrt(sqrt(rho) sigma sqrt(rho))||_F.
double polar_residual(const DensityOperator& rho, const DensityOperator& sigma, const CMatrix& u,
                      const ToleranceConfig& tol = {});

struct PencilEigenpair {
  double lambda = 0.0;
  CMatrix basis;          // orthonormal columns spanning Null(K - lambda L)
  double residual = 0.0;  // ||(K - lambda L) basis||_2
};

/// Eigenstructure of K - lambda L for nonnegative lambda plus the infinite
/// eigenvalue (Null L).
struct PencilEigensystem {
  std::vector<PencilEigenpair> finite;  // ascending lambda
  CMatrix infinite_basis;
  /// dim Null(K - lambda L) for generic lambda. Nonzero means every lambda is
  /// an eigenvalue; `finite` then lists only the structurally distinguished
  /// ones (zero and the spectrum of the geometric mean on supp(rho)).
  Index generic_nullity = 0;
  /// Eigenvalues returned by the solver that are complex or negative.
  std::vector<Complex> rejected;

  bool singular() const { return generic_nullity > 0; }
};

/// Pencil (sqrt(sigma), U sqrt(rho)).
PencilEigensystem pencil_eigensystem(const DensityOperator& rho, const DensityOperator& sigma,
                                     const PolarUnitary& u, const ToleranceConfig& tol = {});

/// Eigensystem of a general pair (K, L) with the given extra candidate
/// eigenvalues tried in addition to zero and the QZ eigenvalues.
PencilEigensystem pencil_eigensystem(const CMatrix& k, const CMatrix& l,
                                     const std::vector<double>& candidates,
                                     const ToleranceConfig& tol = {});

/// Orthonormal basis of Null(K - lambda L); lambda = nullopt means Null(L).
CMatrix pencil_null_space(const CMatrix& k, const CMatrix& l, std::optional<double> lambda,
                          const ToleranceConfig& tol = {});

struct ParallelResult {
  bool parallel = false;
  std::optional<double> kappa;  // nullopt: the A = 0 branch (lambda = infinity)
  double residual = 0.0;        // ||B - kappa A|| / scale, or ||A|| / scale on the A = 0 branch
};

/// B = kappa A with kappa >= 0, or A = 0, relative to `scale`.
ParallelResult parallel_test(const CMatrix& a, const CMatrix& b, double scale,
                             const ToleranceConfig& tol = {});

/// Tests U sqrt(rho) sqrt(E) against sqrt(sigma) sqrt(E), scaled by ||sqrt(E)||_F.
ParallelResult parallel_check(const CMatrix& e, const DensityOperator& rho,
                              const DensityOperator& sigma, const CMatrix& u,
                              const ToleranceConfig& tol = {});

}  // namespace fidopt
