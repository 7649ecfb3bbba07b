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
#include "fidopt/geometric_mean.hpp"

#include <algorithm>

namespace fidopt {

CMatrix geometric_mean_matrix(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol) {
  const CMatrix sa = psd_sqrt(a, tol);
  const CMatrix sa_pinv = psd_power(a, -0.5, tol);
  psd_sqrt(b, tol);  // positivity check on B
  const CMatrix inner = hermitian_part(sa_pinv * b * sa_pinv);
  return hermitian_part(sa * psd_sqrt(inner, tol) * sa);
}

GeometricMeanReport geometric_mean(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol) {
  GeometricMeanReport r;
  r.mean = geometric_mean_matrix(a, b, tol);
  r.support = support_projector(r.mean, tol);
  const CMatrix pa = support_projector(a, tol);
  const CMatrix pb = support_projector(b, tol);
  r.pi_ab = support_projector(hermitian_part(pa * pb * pa), tol);

  const auto es = eigh(r.mean);
  const double top = std::max(0.0, es.eigenvalues.maxCoeff());
  auto clusters = cluster_eigenspaces(es, tol);
  for (auto it = clusters.rbegin(); it != clusters.rend(); ++it) {
    if (top > 0.0 && it->eigenvalue > rank_threshold(top, tol)) r.eigenspaces.push_back(*it);
  }
  return r;
}

std::array<bool, 9> gm_equivalence_flags(const CMatrix& a, const CMatrix& b,
                                         const ToleranceConfig& tol) {
  const Index d = a.rows();
  const CMatrix id = identity(d);
  const CMatrix pa = support_projector(a, tol);
  const CMatrix pb = support_projector(b, tol);
  const CMatrix a_pinv = psd_pinv(a, tol);
  const CMatrix b_pinv = psd_pinv(b, tol);

  const CMatrix m_ab = geometric_mean_matrix(a, b, tol);
  const CMatrix m_ba = geometric_mean_matrix(b, a, tol);
  const CMatrix m_inv = geometric_mean_matrix(b_pinv, a_pinv, tol);
  const CMatrix p_ab = support_projector(m_ab, tol);
  const CMatrix p_ba = support_projector(m_ba, tol);
  const CMatrix p_inv = support_projector(m_inv, tol);

  std::array<bool, 9> f{};
  f[0] = commutator_norm(pa, pb) <= tol.cluster_gap;
  f[1] = same_projector(p_ab, intersection_projector(pa, pb, tol), tol);
  f[2] = projector_contained(p_ab, pb, tol);
  f[3] = same_projector(id - p_ab, sum_projector(id - pa, id - pb, tol), tol);
  f[4] = projector_contained(id - pb, id - p_ab, tol);
  f[5] = same_projector(p_ab, p_ba, tol);
  f[6] = same_projector(p_ab, p_inv, tol);
  const CMatrix m_ab_pinv = pseudo_inverse(m_ab, tol);
  f[7] = (m_inv - m_ab_pinv).norm() <= tol.cluster_gap * (1.0 + m_ab_pinv.norm());
  f[8] = commutator_norm(m_inv, m_ab) <= tol.cluster_gap * (1.0 + m_inv.norm() * m_ab.norm());
  return f;
}

}  // namespace fidopt
