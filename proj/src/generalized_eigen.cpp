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
#include "fidopt/generalized_eigen.hpp"

#include <complex>
#include <string>

#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "fidopt/error.hpp"

namespace fidopt {

std::vector<HomogeneousEigenvalue> generalized_eigenvalues(const CMatrix& k, const CMatrix& l) {
  require_square(k, "pencil operator K");
  require_square(l, "pencil operator L");
  if (k.rows() != l.rows()) {
    throw Error("pencil.dimension", "pencil operators have different dimensions");
  }
  const auto n = static_cast<lapack_int>(k.rows());
  CMatrix a = k;
  CMatrix b = l;
  CVector alpha(n);
  CVector beta(n);
  const lapack_int info =
      LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, b.data(), n, alpha.data(),
                    beta.data(), nullptr, 1, nullptr, 1);
  if (info != 0) {
    throw Error("pencil.eigensolver",
                "generalized eigensolver failed (zggev info " + std::to_string(info) + ")");
  }
  std::vector<HomogeneousEigenvalue> out;
  out.reserve(static_cast<std::size_t>(n));
  for (lapack_int i = 0; i < n; ++i) out.push_back({alpha(i), beta(i)});
  return out;
}

}  // namespace fidopt
