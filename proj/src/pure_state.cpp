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
#include "fidopt/pure_state.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fidopt/error.hpp"

namespace fidopt {

namespace {

const Complex kI(0.0, 1.0);

CMatrix pauli(int k) {
  CMatrix p(2, 2);
  switch (k) {
    case 0: p << 0, 1, 1, 0; break;
    case 1: p << 0, -kI, kI, 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

void require_qubit(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error("bloch.dimension", "Bloch vectors need a qubit");
}

}  // namespace

BlochVector bloch_vector(const CMatrix& rho) {
  require_qubit(rho);
  BlochVector v;
  for (int k = 0; k < 3; ++k) v(k) = (rho * pauli(k)).trace().real();
  return v;
}

CMatrix pure_state_from_bloch(const BlochVector& p) {
  if (std::abs(p.norm() - 1.0) > 1e-10) {
    throw Error("bloch.unit", "Bloch vector of a pure state must have unit length");
  }
  CMatrix s = identity(2);
  for (int k = 0; k < 3; ++k) s += p(k) * pauli(k);
  return 0.5 * s;
}

double ArcSpec::angle(const BlochVector& p) const { return std::atan2(p.dot(e2), p.dot(e1)); }

ArcSpec make_arc(const BlochVector& a, const BlochVector& b) {
  const BlochVector cross = a.cross(b);
  if (cross.norm() <= 1e-12) {
    throw Error("arc.degenerate", "arc endpoints coincide or are antipodal");
  }
  ArcSpec arc;
  arc.a = a.normalized();
  arc.b = b.normalized();
  arc.m = -arc.a;
  arc.n = -arc.b;
  arc.normal = cross.normalized();
  arc.e1 = arc.a;
  arc.e2 = (arc.b - arc.b.dot(arc.a) * arc.a).normalized();
  arc.theta_b = arc.angle(arc.b);
  return arc;
}

ArcSpec make_arc(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != 2 || sigma.dim() != 2 || !rho.is_pure() || !sigma.is_pure()) {
    throw Error("arc.state", "the arc needs two pure qubit states");
  }
  return make_arc(bloch_vector(rho.matrix()), bloch_vector(sigma.matrix()));
}

bool on_major_arc(const BlochVector& p, const ArcSpec& arc, double tol) {
  const BlochVector u = p.normalized();
  if (std::abs(u.dot(arc.normal)) > tol) return false;
  const double phi = arc.angle(u);
  return phi >= arc.theta_b - std::numbers::pi - tol || phi <= -std::numbers::pi + tol;
}

Povm arc_povm(const std::vector<BlochVector>& points, const ArcSpec& arc, double tol,
              const ToleranceConfig& cfg) {
  if (points.size() < 2) throw Error("arc.infeasible", "an arc POVM needs at least two points");
  const auto k = static_cast<Index>(points.size());
  Eigen::MatrixXd sys(4, k);
  for (Index i = 0; i < k; ++i) {
    const BlochVector& p = points[static_cast<std::size_t>(i)];
    if (!on_major_arc(p, arc, tol)) {
      throw Error("arc.off_arc", "point " + std::to_string(i) + " is not on the major arc");
    }
    sys(0, i) = 1.0;
    sys.block(1, i, 3, 1) = p.normalized();
  }
  Eigen::Vector4d rhs(2.0, 0.0, 0.0, 0.0);
  const Eigen::VectorXd w = sys.completeOrthogonalDecomposition().solve(rhs);
  const double residual = (sys * w - rhs).norm();
  if (residual > cfg.opt_tol || w.minCoeff() < -cfg.opt_tol) {
    throw Error("arc.infeasible", "no nonnegative weights complete the arc points (residual " +
                                      std::to_string(residual) + ", min weight " +
                                      std::to_string(w.minCoeff()) + ")");
  }
  std::vector<PovmElement> els;
  for (Index i = 0; i < k; ++i) {
    els.push_back({"a" + std::to_string(i),
                   std::max(0.0, w(i)) *
                       pure_state_from_bloch(points[static_cast<std::size_t>(i)].normalized())});
  }
  return Povm::from_elements(std::move(els), cfg);
}

PencilEigensystem pure_pencil_eigensystem(const DensityOperator& rho,
                                          const DensityOperator& sigma,
                                          const ToleranceConfig& tol) {
  if (rho.dim() != sigma.dim()) throw Error("states.dimension", "states have different dimensions");
  if (!sigma.is_pure()) throw Error("pure.sigma", "sigma must be a pure state");
  if ((rho.matrix() * sigma.matrix()).norm() <= tol.opt_tol) {
    throw Error("pure.orthogonal", "rho sigma = 0; the states are perfectly distinguishable");
  }
  const CMatrix k = rho.support() * sigma.matrix();
  const CMatrix& l = rho.support();
  std::vector<double> candidates{1.0};
  const auto es = eigh(hermitian_part(k * rho.support()));
  const double top = es.eigenvalues.maxCoeff();
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) > rank_threshold(top, tol)) candidates.push_back(es.eigenvalues(i));
  }
  return pencil_eigensystem(k, l, candidates, tol);
}

CMatrix pure_pencil_eigenprojector(const CMatrix& pi_rho, const CMatrix& sigma,
                                   std::optional<double> lambda, const ToleranceConfig& tol) {
  const CMatrix basis = pencil_null_space(pi_rho * sigma, pi_rho, lambda, tol);
  return basis * basis.adjoint();
}

PureCriterionResult pure_criterion(const Povm& e, const DensityOperator& rho,
                                   const DensityOperator& sigma, const ToleranceConfig& tol) {
  PureCriterionResult out;
  out.optimal = true;
  const CMatrix& pr = rho.support();
  const CMatrix prs = pr * sigma.matrix();
  for (const auto& el : e) {
    const CMatrix root = psd_sqrt(hermitian_part(el.op), tol);
    auto r = parallel_test(pr * root, prs * root, root.norm(), tol);
    out.optimal = out.optimal && r.parallel;
    out.elements.push_back(r);
  }
  return out;
}

PureMixedReduction reduce_pure_mixed(const DensityOperator& rho, const DensityOperator& sigma,
                                     const ToleranceConfig& tol) {
  if (rho.dim() != sigma.dim()) throw Error("states.dimension", "states have different dimensions");
  if (!sigma.is_pure()) throw Error("pure.reduction", "sigma must be a pure state");
  if (rho.rank() < 2) throw Error("pure.reduction", "rho must have rank at least 2");
  if (commutator_norm(sigma.matrix(), rho.support()) <= tol.cluster_gap) {
    throw Error("pure.reduction", "sigma commutes with the support projector of rho");
  }
  if (numerical_rank(rho.matrix() + sigma.matrix(), tol) < rho.dim()) {
    throw Error("pure.reduction", "rho + sigma is singular");
  }
  const CMatrix basis = range_basis(rho.null_projector() + sigma.matrix(), tol);
  if (basis.cols() != 2) {
    throw Error("pure.reduction", "Null(rho) + supp(sigma) is not two-dimensional");
  }
  const CMatrix pi2 = basis * basis.adjoint();
  const CMatrix varrho_full = hermitian_part(pi2 * rho.support() * pi2);
  if ((varrho_full * sigma.matrix() - rho.support() * sigma.matrix()).norm() > 1e-10) {
    throw Error("pure.reduction", "reduced state does not reproduce Pi_rho sigma");
  }
  auto reduce = [&](const CMatrix& m) {
    return DensityOperator::from_matrix(hermitian_part(basis.adjoint() * m * basis), tol);
  };
  return PureMixedReduction{basis, pi2, varrho_full, reduce(varrho_full), reduce(sigma.matrix())};
}

Povm lift_reduced_povm(const Povm& reduced, const PureMixedReduction& r,
                       const DensityOperator& sigma, const ToleranceConfig& tol) {
  std::vector<PovmElement> lifted;
  for (const auto& el : reduced) {
    lifted.push_back({el.label, r.basis * el.op * r.basis.adjoint()});
  }
  lifted.push_back({"V0", identity(r.pi2.rows()) - r.pi2});

  std::vector<PovmElement> out;
  std::optional<std::size_t> null_slot;
  for (auto& el : lifted) {
    const double weight = (sigma.matrix() * el.op).trace().real();
    const bool in_null_sigma = weight <= tol.opt_tol * std::max(1.0, el.op.trace().real());
    if (in_null_sigma && null_slot) {
      out[*null_slot].op += el.op;
      out[*null_slot].label += "+" + el.label;
      continue;
    }
    if (in_null_sigma) null_slot = out.size();
    out.push_back(std::move(el));
  }
  return Povm::from_elements(std::move(out), tol);
}

Povm compress_to_reduced(const Povm& e, const PureMixedReduction& r, const ToleranceConfig& tol) {
  std::vector<PovmElement> out;
  for (const auto& el : e) {
    CMatrix c = hermitian_part(r.basis.adjoint() * el.op * r.basis);
    if (c.norm() <= tol.opt_tol * std::sqrt(2.0)) continue;
    out.push_back({el.label, std::move(c)});
  }
  return Povm::from_elements(std::move(out), tol);
}

}  // namespace fidopt
