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

#include <array>
#include <vector>

#include "fidopt/linalg.hpp"

namespace fidopt {

/// M(A,B) = sqrt(A) sqrt(sqrt(A)^+ B sqrt(A)^+) sqrt(A) together with its
/// support data. To get M(rho^+, sigma) pass A = pinv(rho).
struct GeometricMeanReport {
  CMatrix mean;
  CMatrix support;  // projector onto supp(mean)
  CMatrix pi_ab;    // projector onto supp(Pi_A Pi_B Pi_A)
  /// Clustered eigenspaces of the mean with eigenvalue above the rank
  /// threshold, in descending eigenvalue order.
  std::vector<Eigenspace> eigenspaces;
};

GeometricMeanReport geometric_mean(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol);

/// Just the mean, without support and eigenspace data.
CMatrix geometric_mean_matrix(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol);

/// The nine support statements about M(A,B), each evaluated on its own:
///  0 Pi_A, Pi_B commute
///  1 supp M(A,B) = supp A ∩ supp B
///  2 supp M(A,B) <= supp B
///  3 Null M(A,B) = Null A + Null B
///  4 Null B <= Null M(A,B)
///  5 supp M(B,A) = supp M(A,B)
///  6 supp M(B^+,A^+) = supp M(A,B)
///  7 M(B^+,A^+) = M(A,B)^+
///  8 M(B^+,A^+) and M(A,B) commute
std::array<bool, 9> gm_equivalence_flags(const CMatrix& a, const CMatrix& b,
                                         const ToleranceConfig& tol);

}  // namespace fidopt
