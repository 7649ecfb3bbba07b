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
#include "fidopt/pencil.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "fidopt/error.hpp"
#include "fidopt/generalized_eigen.hpp"
#include "fidopt/geometric_mean.hpp"

namespace fidopt {

PolarUnitary polar_unitary_any(const DensityOperator& rho, const DensityOperator& sigma,
                               const ToleranceConfig& tol) {
  if (rho.dim() != sigma.dim()) throw Error("states.dimension", "states have different dimensions");
  const CMatrix x = rho.sqrt() * sigma.sqrt();
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  PolarUnitary p;
  p.singular_values = svd.singularValues();
  p.w = svd.matrixU();
  p.v = svd.matrixV();
  const double top = p.singular_values.size() > 0 ? p.singular_values(0) : 0.0;
  p.rank = top > 0.0 ? static_cast<Index>(
                           (p.singular_values.array() > rank_threshold(top, tol)).count())
                     : 0;

  const CMatrix& pr = rho.support();
  const CMatrix& ps = sigma.support();
  if (commutator_norm(pr, ps) <= tol.cluster_gap) {
    const Index d = rho.dim();
    const Index r = p.rank;
    const CMatrix a_pos = p.w.leftCols(r);
    const CMatrix b_pos = p.v.leftCols(r);
    const CMatrix null_rho = range_basis(identity(d) - pr, tol);
    const CMatrix rest_rho = range_basis(pr - a_pos * a_pos.adjoint(), tol);
    const CMatrix rest_sigma = range_basis(ps - b_pos * b_pos.adjoint(), tol);
    const CMatrix null_sigma = range_basis(identity(d) - ps, tol);
    if (null_rho.cols() == rest_sigma.cols() && rest_rho.cols() == null_sigma.cols() &&
        r + null_rho.cols() + rest_rho.cols() == d) {
      p.w << a_pos, null_rho, rest_rho;
      p.v << b_pos, rest_sigma, null_sigma;
      p.aligned = true;
    }
  }
  p.u = p.v * p.w.adjoint();
  return p;
}

PolarUnitary construct_polar_unitary(const DensityOperator& rho, const DensityOperator& sigma,
                                     const ToleranceConfig& tol) {
  if (rho.dim() != sigma.dim()) throw Error("states.dimension", "states have different dimensions");
  if (numerical_rank(rho.matrix() + sigma.matrix(), tol) < rho.dim()) {
    throw Error("pencil.singular_sum",
                "rho + sigma is singular; restrict both states to its support first");
  }
  return polar_unitary_any(rho, sigma, tol);
}

double polar_residual(const DensityOperator& rho, const DensityOperator& sigma, const CMatrix& u,
                      const ToleranceConfig& tol) {
  const CMatrix target =
      psd_sqrt(hermitian_part(rho.sqrt() * sigma.matrix() * rho.sqrt()), tol);
  return (rho.sqrt() * sigma.sqrt() * u - target).norm();
}

CMatrix pencil_null_space(const CMatrix& k, const CMatrix& l, std::optional<double> lambda,
                          const ToleranceConfig& tol) {
  if (!lambda) return null_space(l, tol.cluster_gap * operator_norm(l));
  const double scale = operator_norm(k) + std::abs(*lambda) * operator_norm(l);
  return null_space(k - *lambda * l, tol.cluster_gap * scale);
}

namespace {

constexpr double kGenericProbes[] = {0.3713, 1.6180, 4.2361};

PencilEigensystem solve_pencil(const CMatrix& k, const CMatrix& l, CMatrix infinite_basis,
                               std::vector<double> candidates, const ToleranceConfig& tol) {
  require_square(k, "pencil operator K");
  if (k.rows() != l.rows() || l.rows() != l.cols()) {
    throw Error("pencil.dimension", "pencil operators have different dimensions");
  }
  PencilEigensystem out;
  out.infinite_basis = std::move(infinite_basis);
  out.generic_nullity = k.rows();
  for (double probe : kGenericProbes) {
    out.generic_nullity =
        std::min(out.generic_nullity, pencil_null_space(k, l, probe, tol).cols());
  }

  candidates.push_back(0.0);
  if (out.generic_nullity == 0) {
    for (const auto& h : generalized_eigenvalues(k, l)) {
      if (std::abs(h.beta) <= 1e-13 * std::abs(h.alpha) || std::abs(h.beta) == 0.0) continue;
      const Complex z = h.alpha / h.beta;
      if (std::abs(z.imag()) > tol.opt_tol * (1.0 + std::abs(z)) || z.real() < -tol.opt_tol) {
        out.rejected.push_back(z);
        continue;
      }
      candidates.push_back(std::max(0.0, z.real()));
    }
  }
  std::sort(candidates.begin(), candidates.end());

  std::size_t start = 0;
  for (std::size_t i = 1; i <= candidates.size(); ++i) {
    if (i < candidates.size() &&
        candidates[i] - candidates[i - 1] <= tol.cluster_gap * (1.0 + candidates[i])) {
      continue;
    }
    double lambda = 0.0;
    for (std::size_t j = start; j < i; ++j) lambda += candidates[j];
    lambda /= static_cast<double>(i - start);
    start = i;
    CMatrix basis = pencil_null_space(k, l, lambda, tol);
    if (basis.cols() == 0) continue;
    const double residual = operator_norm((k - lambda * l) * basis);
    out.finite.push_back({lambda, std::move(basis), residual});
  }
  return out;
}

}  // namespace

PencilEigensystem pencil_eigensystem(const CMatrix& k, const CMatrix& l,
                                     const std::vector<double>& candidates,
                                     const ToleranceConfig& tol) {
  return solve_pencil(k, l, pencil_null_space(k, l, std::nullopt, tol), candidates, tol);
}

PencilEigensystem pencil_eigensystem(const DensityOperator& rho, const DensityOperator& sigma,
                                     const PolarUnitary& u, const ToleranceConfig& tol) {
  const CMatrix k = sigma.sqrt();
  const CMatrix l = u.u * rho.sqrt();
  std::vector<double> candidates;
  const auto gm = geometric_mean(psd_pinv(rho.matrix(), tol), sigma.matrix(), tol);
  for (const auto& s : gm.eigenspaces) candidates.push_back(s.eigenvalue);
  return solve_pencil(k, l, range_basis(rho.null_projector(), tol), std::move(candidates), tol);
}

ParallelResult parallel_test(const CMatrix& a, const CMatrix& b, double scale,
                             const ToleranceConfig& tol) {
  ParallelResult r;
  if (scale <= 0.0) {
    r.parallel = true;
    return r;
  }
  const double an = a.norm();
  if (an <= tol.opt_tol * scale) {
    r.parallel = true;
    r.residual = an / scale;
    return r;
  }
  const double kappa = hs_inner(a, b).real() / (an * an);
  r.kappa = kappa;
  r.residual = (b - kappa * a).norm() / scale;
  r.parallel = kappa >= -tol.opt_tol && r.residual <= tol.opt_tol;
  if (r.parallel && kappa < 0.0) r.kappa = 0.0;
  return r;
}

ParallelResult parallel_check(const CMatrix& e, const DensityOperator& rho,
                              const DensityOperator& sigma, const CMatrix& u,
                              const ToleranceConfig& tol) {
  const CMatrix root = psd_sqrt(hermitian_part(e), tol);
  const CMatrix a = u * rho.sqrt() * root;
  const CMatrix b = sigma.sqrt() * root;
  return parallel_test(a, b, root.norm(), tol);
}

}  // namespace fidopt
