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

#include <Eigen/Dense>
#include <complex>
#include <string_view>
#include <vector>

#include "fidopt/tolerance.hpp"

namespace fidopt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Eigenvalues ascending, eigenvectors as unitary columns.
struct HermitianEigensystem {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

/// One (clustered) eigenvalue with an orthonormal basis of its eigenspace.
struct Eigenspace {
  double eigenvalue = 0.0;
  CMatrix basis;

  Index dim() const { return basis.cols(); }
  CMatrix projector() const { return basis * basis.adjoint(); }
};

bool all_finite(const CMatrix& m);
void require_finite(const CMatrix& m, std::string_view what);
void require_square(const CMatrix& m, std::string_view what);

CMatrix identity(Index d);
CMatrix hermitian_part(const CMatrix& m);
double frobenius(const CMatrix& m);
double operator_norm(const CMatrix& m);
double commutator_norm(const CMatrix& a, const CMatrix& b);
/// Frobenius inner product <A,B> = tr(A^dagger B).
Complex hs_inner(const CMatrix& a, const CMatrix& b);

/// Eigendecomposition of the Hermitian part of `m`.
HermitianEigensystem eigh(const CMatrix& m);

/// Zero cut for a spectrum whose largest magnitude is `largest`:
/// rank_tol_factor * max(largest, 1). Every rank decision goes through it, so
/// an operator that is entirely at rounding level counts as zero.
double rank_threshold(double largest, const ToleranceConfig& tol);

/// Moore-Penrose pseudo-inverse; singular values at or below
/// rank_threshold(sigma_max) are treated as zero.
CMatrix pseudo_inverse(const CMatrix& m, const ToleranceConfig& tol);

/// A^x on supp(A) for PSD A (x may be negative, giving powers of A^+).
/// Eigenvalues in [-psd_clip, rank threshold] are set to zero first; anything
/// below -psd_clip throws "linalg.psd".
CMatrix psd_power(const CMatrix& a, double exponent, const ToleranceConfig& tol);
CMatrix psd_sqrt(const CMatrix& a, const ToleranceConfig& tol);
CMatrix psd_pinv(const CMatrix& a, const ToleranceConfig& tol);

/// Projector onto supp(A) for Hermitian A (eigenvalues with |lambda| above the
/// rank threshold). Throws "linalg.hermitian" for non-Hermitian input.
CMatrix support_projector(const CMatrix& a, const ToleranceConfig& tol);
CMatrix null_projector(const CMatrix& a, const ToleranceConfig& tol);

Index numerical_rank(const CMatrix& m, const ToleranceConfig& tol);

/// Orthonormal basis of range(m), by SVD with the relative rank cut.
CMatrix range_basis(const CMatrix& m, const ToleranceConfig& tol);
/// Orthonormal basis of the right singular vectors of `m` whose singular
/// value is <= abs_threshold.
CMatrix null_space(const CMatrix& m, double abs_threshold);
/// Orthonormal basis of the orthogonal complement of span(basis) in C^d.
CMatrix orthogonal_complement(const CMatrix& basis, const ToleranceConfig& tol);

/// Projector onto the intersection of the ranges of two projectors: the
/// eigenvalue-one eigenspace of (P+Q)/2, cut at 1 - cluster_gap.
CMatrix intersection_projector(const CMatrix& p, const CMatrix& q, const ToleranceConfig& tol);
/// Projector onto range(P) + range(Q).
CMatrix sum_projector(const CMatrix& p, const CMatrix& q, const ToleranceConfig& tol);
/// ||P - Q||_F <= cluster_gap * (1 + ||P||_F).
bool same_projector(const CMatrix& p, const CMatrix& q, const ToleranceConfig& tol);
/// range(P) contained in range(Q): ||(1 - Q) P||_F <= cluster_gap * (1 + ||P||_F).
bool projector_contained(const CMatrix& p, const CMatrix& q, const ToleranceConfig& tol);

/// Eigenvalues within cluster_gap * (1 + |lambda|) of their neighbour are
/// merged (single linkage). Output is ascending by eigenvalue.
std::vector<Eigenspace> cluster_eigenspaces(const HermitianEigensystem& e,
                                            const ToleranceConfig& tol);

}  // namespace fidopt
