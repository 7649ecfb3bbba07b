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
#include "fidopt/divergences.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "fidopt/error.hpp"

namespace fidopt {

namespace {

void require_same_dim(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error("states.dimension", "states have different dimensions");
  }
}

void require_same_outcomes(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  if (p.size() != q.size() || (!p.labels.empty() && !q.labels.empty() && p.labels != q.labels)) {
    throw Error("distribution.labels", "outcome distributions have different label sets");
  }
}

}  // namespace

double bhattacharyya(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  require_same_outcomes(p, q);
  double b = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    b += std::sqrt(std::max(0.0, p.probabilities[m]) * std::max(0.0, q.probabilities[m]));
  }
  return b;
}

double classical_fidelity(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  const double b = bhattacharyya(p, q);
  return b * b;
}

double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  require_same_outcomes(p, q);
  double t = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) t += std::abs(p.probabilities[m] - q.probabilities[m]);
  return 0.5 * t;
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho, sigma);
  Eigen::JacobiSVD<CMatrix> svd(rho.sqrt() * sigma.sqrt());
  const double root = svd.singularValues().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho, sigma);
  const auto es = eigh(rho.matrix() - sigma.matrix());
  return std::clamp(0.5 * es.eigenvalues.cwiseAbs().sum(), 0.0, 1.0);
}

double induced_fidelity(const Povm& e, const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho, sigma);
  return classical_fidelity(measure(e, rho), measure(e, sigma));
}

double induced_trace_distance(const Povm& e, const DensityOperator& rho,
                              const DensityOperator& sigma) {
  require_same_dim(rho, sigma);
  return total_variation(measure(e, rho), measure(e, sigma));
}

DivergenceReport divergence_report(const DensityOperator& rho, const DensityOperator& sigma) {
  DivergenceReport r;
  r.f = fidelity(rho, sigma);
  r.d = trace_distance(rho, sigma);
  r.fvdg_lower = 1.0 - std::sqrt(r.f);
  r.fvdg_upper = std::sqrt(std::max(0.0, 1.0 - r.f));
  return r;
}

}  // namespace fidopt
