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

#include <cmath>
#include <initializer_list>
#include <vector>

#include "fidopt/linalg.hpp"
#include "fidopt/quantum.hpp"

namespace fidopt::testing {

inline CVector ket(std::initializer_list<Complex> entries) {
  CVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

inline CMatrix proj(const CVector& v) { return v * v.adjoint() / v.squaredNorm(); }

inline CMatrix diag(std::initializer_list<double> entries) {
  CMatrix m = CMatrix::Zero(static_cast<Index>(entries.size()), static_cast<Index>(entries.size()));
  Index i = 0;
  for (double e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

inline CMatrix basis_proj(Index d, Index k) {
  CMatrix m = CMatrix::Zero(d, d);
  m(k, k) = 1.0;
  return m;
}

inline bool near(const CMatrix& a, const CMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() <= tol;
}

// |<u|v>| = 1 for unit vectors equal up to a phase.
inline bool same_ray(const CVector& u, const CVector& v, double tol) {
  return std::abs(std::abs(u.normalized().dot(v.normalized())) - 1.0) <= tol;
}

inline DensityOperator state(const CMatrix& m) { return DensityOperator::from_matrix(m); }

// Qutrit pair with M(rho^+, sigma) = M(sigma^+, rho) = |1><1|.
inline CMatrix qutrit_rho() {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(0, 1) = 0.25;
  m(1, 0) = 0.25;
  m(1, 1) = 0.5;
  return m;
}

inline CMatrix qutrit_sigma() {
  CMatrix m = CMatrix::Zero(3, 3);
  m(1, 1) = 0.5;
  m(1, 2) = 0.25;
  m(2, 1) = 0.25;
  m(2, 2) = 0.5;
  return m;
}

// Explicit polar unitary for the qutrit pair, a = sqrt(sqrt(3) + 2).
inline CMatrix qutrit_unitary() {
  const double a = std::sqrt(std::sqrt(3.0) + 2.0);
  const double a2 = a * a;
  CMatrix u(3, 3);
  u << -2.0 * a2 * a, 2.0 * a, 0.0,
       a2, a2 * a2, -2.0 * a,
       1.0, a2, 2.0 * a2 * a;
  return u / (4.0 * a2);
}

inline CVector zero_ket() { return ket({1.0, 0.0}); }
inline CVector one_ket() { return ket({0.0, 1.0}); }
inline CVector plus_ket() { return ket({M_SQRT1_2, M_SQRT1_2}); }
inline CVector minus_ket() { return ket({M_SQRT1_2, -M_SQRT1_2}); }

// Fidelity through eigenvalues of sqrt(rho) sigma sqrt(rho): a different route
// from the SVD used by the library.
inline double fidelity_by_eigenvalues(const CMatrix& rho, const CMatrix& sigma) {
  // Eigenvalues at rounding level are zeroed before the square roots.
  const auto root_of = [](const RVector& ev) {
    const double cut = 1e-13 * std::max(1.0, ev.cwiseAbs().maxCoeff());
    return ev.unaryExpr([cut](double x) { return x > cut ? std::sqrt(x) : 0.0; }).eval();
  };
  Eigen::SelfAdjointEigenSolver<CMatrix> er(rho);
  const RVector lr = root_of(er.eigenvalues());
  const CMatrix sr = er.eigenvectors() * lr.asDiagonal() * er.eigenvectors().adjoint();
  const CMatrix inner = sr * sigma * sr;
  Eigen::SelfAdjointEigenSolver<CMatrix> ei(0.5 * (inner + inner.adjoint()));
  const double root = root_of(ei.eigenvalues()).sum();
  return root * root;
}

// Sum of |eigenvalues| / 2 computed from the characteristic data of rho - sigma.
inline double trace_distance_by_eigenvalues(const CMatrix& rho, const CMatrix& sigma) {
  Eigen::SelfAdjointEigenSolver<CMatrix> e(rho - sigma);
  return 0.5 * e.eigenvalues().cwiseAbs().sum();
}

// Classical fidelity straight from tr(E rho), tr(E sigma).
inline double direct_induced_fidelity(const std::vector<CMatrix>& ops, const CMatrix& rho,
                                      const CMatrix& sigma) {
  // probabilities below 1e-14 are rounding noise of an exact zero
  const auto prob = [](const CMatrix& e, const CMatrix& s) {
    const double p = (e * s).trace().real();
    return p < 1e-14 ? 0.0 : p;
  };
  double b = 0.0;
  for (const auto& e : ops) {
    const double p = prob(e, rho);
    const double q = prob(e, sigma);
    b += std::sqrt(p * q);
  }
  return b * b;
}

inline std::vector<CMatrix> operators(const Povm& e) {
  std::vector<CMatrix> out;
  for (const auto& el : e) out.push_back(el.op);
  return out;
}

}  // namespace fidopt::testing
