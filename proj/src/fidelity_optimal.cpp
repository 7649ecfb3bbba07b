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
#include "fidopt/fidelity_optimal.hpp"

#include <cmath>
#include <numeric>

#include "fidopt/divergences.hpp"
#include "fidopt/error.hpp"
#include "fidopt/geometric_mean.hpp"

namespace fidopt {

namespace {

void require_compatible(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw Error("states.dimension", "states have different dimensions");
}

void require_distinct(const DensityOperator& rho, const DensityOperator& sigma,
                      const ToleranceConfig& tol) {
  if ((rho.matrix() - sigma.matrix()).norm() <= tol.opt_tol) {
    throw Error("states.distinct", "states must be distinct");
  }
}

void require_nonsingular_sum(const DensityOperator& rho, const DensityOperator& sigma,
                             const ToleranceConfig& tol) {
  if (numerical_rank(rho.matrix() + sigma.matrix(), tol) < rho.dim()) {
    throw Error("pencil.singular_sum",
                "rho + sigma is singular; restrict both states to its support first");
  }
}

std::string join(const std::string& a, const std::string& b) { return a + "+" + b; }

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Povm build_canonical_pvm(const DensityOperator& rho, const DensityOperator& sigma,
                         const ToleranceConfig& tol) {
  require_compatible(rho, sigma);
  require_distinct(rho, sigma, tol);
  require_nonsingular_sum(rho, sigma, tol);
  const Index d = rho.dim();
  const auto gm = geometric_mean(psd_pinv(rho.matrix(), tol), sigma.matrix(), tol);

  std::vector<PovmElement> els;
  CMatrix pi_rs = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < gm.eigenspaces.size(); ++i) {
    CMatrix p = gm.eigenspaces[i].projector();
    pi_rs += p;
    els.push_back({"P" + std::to_string(i), std::move(p)});
  }
  if (!same_projector(pi_rs, gm.pi_ab, tol)) {
    throw Error("geometric_mean.support",
                "support of the geometric mean differs from supp(Pi_rho Pi_sigma Pi_rho)");
  }
  const CMatrix rest = hermitian_part(rho.support() - pi_rs);
  if (rest.trace().real() > 0.5) els.push_back({"R", rest});
  const CMatrix null = rho.null_projector();
  if (null.trace().real() > 0.5) els.push_back({"N", null});
  return Povm::from_elements(std::move(els), tol);
}

OptimalityVerdict verify_f_optimal(const Povm& e, const DensityOperator& rho,
                                   const DensityOperator& sigma, const ToleranceConfig& tol) {
  require_compatible(rho, sigma);
  if (e.dim() != rho.dim()) throw Error("povm.dimension", "POVM and states have different dimensions");
  const PolarUnitary pu = polar_unitary_any(rho, sigma, tol);

  OptimalityVerdict v;
  v.is_f_optimal = true;
  for (const auto& el : e) {
    const auto r = parallel_check(el.op, rho, sigma, pu.u, tol);
    v.elements.push_back({el.label, r.parallel, r.kappa, r.residual});
    v.is_f_optimal = v.is_f_optimal && r.parallel;
  }
  v.is_simple = is_simple(e, tol);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (parallel_check(e[i].op + e[j].op, rho, sigma, pu.u, tol).parallel) {
        v.mergeable_pairs.emplace_back(i, j);
      }
    }
  }
  v.is_minimal = v.is_f_optimal && v.is_simple && v.mergeable_pairs.empty();
  v.f = fidelity(rho, sigma);
  v.f_e = induced_fidelity(e, rho, sigma);
  v.gap = v.f_e - v.f;
  if (v.is_f_optimal && std::abs(v.gap) > 10.0 * tol.opt_tol) {
    v.diagnostic = "parallel test passed but F_E - F = " + std::to_string(v.gap);
  }
  return v;
}

Povm merge_by_eigenspace(const std::vector<PovmElement>& elements, const DensityOperator& rho,
                         const DensityOperator& sigma, const ToleranceConfig& tol) {
  const PolarUnitary pu = polar_unitary_any(rho, sigma, tol);
  DisjointSets sets(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (sets.find(i) == sets.find(j)) continue;
      if (parallel_check(elements[i].op + elements[j].op, rho, sigma, pu.u, tol).parallel) {
        sets.unite(i, j);
      }
    }
  }
  std::vector<PovmElement> out;
  std::vector<std::size_t> slot(elements.size(), elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == elements.size()) {
      slot[root] = out.size();
      out.push_back(elements[i]);
    } else {
      auto& target = out[slot[root]];
      target.op += elements[i].op;
      target.label = join(target.label, elements[i].label);
    }
  }
  return Povm::from_elements(std::move(out), tol);
}

Povm mixing_family(const Povm& e1, const Povm& e2, double p, const DensityOperator& rho,
                   const DensityOperator& sigma, const ToleranceConfig& tol) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("mixing.weight", "mixing weight must lie in [0,1]");
  for (const Povm* e : {&e1, &e2}) {
    if (!verify_f_optimal(*e, rho, sigma, tol).is_f_optimal) {
      throw Error("mixing.input", "mixing inputs must be F-optimal");
    }
  }
  std::vector<PovmElement> all;
  if (p > 0.0) {
    for (const auto& el : e1) all.push_back({"a." + el.label, p * el.op});
  }
  if (p < 1.0) {
    for (const auto& el : e2) all.push_back({"b." + el.label, (1.0 - p) * el.op});
  }
  return merge_by_eigenspace(all, rho, sigma, tol);
}

DichotomyReport classify_dichotomy(const DensityOperator& rho, const DensityOperator& sigma,
                                   const ToleranceConfig& tol) {
  DichotomyReport r;
  r.m_rho_sigma = build_canonical_pvm(rho, sigma, tol);
  r.m_sigma_rho = build_canonical_pvm(sigma, rho, tol);
  r.weak_commutativity = commutator_norm(rho.support(), sigma.support()) <= tol.cluster_gap;
  r.commuting_flag = commuting_povms(r.m_rho_sigma, r.m_sigma_rho, tol);
  r.compatibility = compatibility(r.m_rho_sigma, r.m_sigma_rho, tol);
  r.equivalent_flag = equivalent(r.m_rho_sigma, r.m_sigma_rho, tol);

  std::vector<PovmElement> all;
  for (const auto& el : r.m_rho_sigma) all.push_back({"a." + el.label, 0.5 * el.op});
  for (const auto& el : r.m_sigma_rho) all.push_back({"b." + el.label, 0.5 * el.op});
  const Povm merged = merge_by_eigenspace(all, rho, sigma, tol);
  r.unique_minimal = equivalent(merged, r.m_rho_sigma, tol);
  return r;
}

RestrictedStates restrict_states(const DensityOperator& rho, const DensityOperator& sigma,
                                 const ToleranceConfig& tol) {
  require_compatible(rho, sigma);
  const CMatrix sum = rho.matrix() + sigma.matrix();
  const CMatrix basis = range_basis(sum, tol);
  const CMatrix gamma0 = identity(rho.dim()) - basis * basis.adjoint();
  auto reduce = [&](const DensityOperator& s) {
    return DensityOperator::from_matrix(hermitian_part(basis.adjoint() * s.matrix() * basis), tol);
  };
  return RestrictedStates{basis, gamma0, reduce(rho), reduce(sigma)};
}

Povm restrict_povm(const Povm& e, const CMatrix& basis, const ToleranceConfig& tol) {
  std::vector<PovmElement> els;
  els.reserve(e.size());
  for (const auto& el : e) {
    els.push_back({el.label, hermitian_part(basis.adjoint() * el.op * basis)});
  }
  return Povm::from_elements(std::move(els), tol);
}

RestrictedProblem restrict_to_joint_support(const Povm& e, const DensityOperator& rho,
                                            const DensityOperator& sigma,
                                            const ToleranceConfig& tol) {
  RestrictedStates states = restrict_states(rho, sigma, tol);
  Povm povm = restrict_povm(e, states.basis, tol);
  return RestrictedProblem{std::move(states), std::move(povm)};
}

Povm extend_with_null_weights(const Povm& c, const RestrictedStates& r,
                              const std::vector<double>& weights, const ToleranceConfig& tol) {
  if (weights.size() != c.size()) {
    throw Error("extension.weights", "one weight per POVM element is required");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error("extension.weights", "weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error("extension.weights", "weights must sum to 1");
  std::vector<PovmElement> els;
  for (std::size_t j = 0; j < c.size(); ++j) {
    els.push_back({c[j].label, r.basis * c[j].op * r.basis.adjoint() + weights[j] * r.gamma0});
  }
  return Povm::from_elements(std::move(els), tol);
}

}  // namespace fidopt
