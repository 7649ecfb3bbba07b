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

#include "fidopt/linalg.hpp"

namespace fidopt {

/// Homogeneous eigenvalue (alpha, beta) of K - lambda L, lambda = alpha/beta.
struct HomogeneousEigenvalue {
  Complex alpha;
  Complex beta;
};

/// QZ-based generalized eigenvalues of the square pair (K, L) (LAPACK zggev).
/// Throws "pencil.eigensolver" when the QZ iteration fails.
std::vector<HomogeneousEigenvalue> generalized_eigenvalues(const CMatrix& k, const CMatrix& l);

}  // namespace fidopt
