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
#include "fidopt/trace_optimal.hpp"

#include <cmath>

#include "fidopt/divergences.hpp"
#include "fidopt/error.hpp"

namespace fidopt {

JordanSplit jordan_split(const DensityOperator& rho, const DensityOperator& sigma,
                         const ToleranceConfig& tol) {
  if (rho.dim() != sigma.dim()) throw Error("states.dimension", "states have different dimensions");
  const CMatrix diff = rho.matrix() - sigma.matrix();
  if (diff.norm() <= tol.opt_tol) throw Error("states.distinct", "states must be distinct");
  const auto es = eigh(diff);
  const double cut = rank_threshold(es.eigenvalues.cwiseAbs().maxCoeff(), tol);
  const Index d = rho.dim();
  JordanSplit j{CMatrix::Zero(d, d), CMatrix::Zero(d, d), CMatrix::Zero(d, d),
                CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
  for (Index i = 0; i < d; ++i) {
    const double w = es.eigenvalues(i);
    const CMatrix p = es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    if (w > cut) {
      j.q_plus += w * p;
      j.pi_plus += p;
    } else if (w < -cut) {
      j.q_minus -= w * p;
      j.pi_minus += p;
    } else {
      j.pi_zero += p;
    }
  }
  return j;
}

TraceVerdict verify_t_optimal(const Povm& e, const DensityOperator& rho,
                              const DensityOperator& sigma, const ToleranceConfig& tol) {
  if (e.dim() != rho.dim()) throw Error("povm.dimension", "POVM and states have different dimensions");
  const JordanSplit j = jordan_split(rho, sigma, tol);
  auto element_ok = [&](const CMatrix& op) {
    const double scale = tol.opt_tol * op.norm();
    return (j.q_plus * op).norm() <= scale || (j.q_minus * op).norm() <= scale;
  };
  TraceVerdict v;
  v.is_t_optimal = true;
  for (const auto& el : e) {
    const bool ok = element_ok(el.op);
    v.elements.push_back(ok);
    v.is_t_optimal = v.is_t_optimal && ok;
  }
  bool mergeable = false;
  for (std::size_t a = 0; a < e.size() && !mergeable; ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (element_ok(e[a].op + e[b].op)) {
        mergeable = true;
        break;
      }
    }
  }
  v.is_minimal = v.is_t_optimal && is_simple(e, tol) && !mergeable;
  v.d = trace_distance(rho, sigma);
  v.d_e = induced_trace_distance(e, rho, sigma);
  v.gap = v.d - v.d_e;
  if (v.is_t_optimal && std::abs(v.gap) > 10.0 * tol.opt_tol) {
    v.diagnostic = "support test passed but D - D_E = " + std::to_string(v.gap);
  }
  return v;
}

Povm minimal_t_optimal(const DensityOperator& rho, const DensityOperator& sigma, const CMatrix& q0,
                       const ToleranceConfig& tol) {
  const JordanSplit j = jordan_split(rho, sigma, tol);
  if (q0.rows() != rho.dim() || q0.cols() != rho.dim()) {
    throw Error("t_optimal.q0", "Q0 has the wrong dimensions");
  }
  require_finite(q0, "Q0");
  const CMatrix q = hermitian_part(q0);
  if ((q0 - q0.adjoint()).norm() > tol.opt_tol * (1.0 + q0.norm()) ||
      (q - j.pi_zero * q * j.pi_zero).norm() > tol.opt_tol * (1.0 + q.norm())) {
    throw Error("t_optimal.q0", "Q0 must be Hermitian and supported in Null(rho - sigma)");
  }
  if (eigh(q).eigenvalues.minCoeff() < -tol.psd_clip ||
      eigh(j.pi_zero - q).eigenvalues.minCoeff() < -tol.psd_clip) {
    throw Error("t_optimal.q0", "Q0 must satisfy 0 <= Q0 <= Pi_zero");
  }
  const CMatrix t = j.pi_plus + q;
  return Povm::from_elements({{"T+", t}, {"T-", identity(rho.dim()) - t}}, tol);
}

double helstrom_success(const DensityOperator& rho, const DensityOperator& sigma) {
  return 0.5 * (1.0 + trace_distance(rho, sigma));
}

}  // namespace fidopt
