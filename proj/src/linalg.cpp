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
#include "fidopt/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "fidopt/error.hpp"

namespace fidopt {

bool all_finite(const CMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

void require_finite(const CMatrix& m, std::string_view what) {
  if (!all_finite(m)) {
    throw Error("linalg.finite", std::string(what) + " has non-finite entries");
  }
}

void require_square(const CMatrix& m, std::string_view what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error("linalg.square", std::string(what) + " must be a non-empty square matrix");
  }
}

CMatrix identity(Index d) { return CMatrix::Identity(d, d); }

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

double frobenius(const CMatrix& m) { return m.norm(); }

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double commutator_norm(const CMatrix& a, const CMatrix& b) {
  return (a * b - b * a).norm();
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  return (a.adjoint() * b).trace();
}

HermitianEigensystem eigh(const CMatrix& m) {
  require_square(m, "matrix");
  require_finite(m, "matrix");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(m));
  if (es.info() != Eigen::Success) {
    throw Error("linalg.eigensolver", "Hermitian eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

double rank_threshold(double largest, const ToleranceConfig& tol) {
  return tol.rank_tol_factor * std::max(largest, 1.0);
}

CMatrix pseudo_inverse(const CMatrix& m, const ToleranceConfig& tol) {
  require_finite(m, "matrix");
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  CMatrix result = CMatrix::Zero(m.cols(), m.rows());
  if (s.size() == 0 || s(0) == 0.0) return result;
  const double cut = rank_threshold(s(0), tol);
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > cut) {
      result += svd.matrixV().col(i) * (1.0 / s(i)) * svd.matrixU().col(i).adjoint();
    }
  }
  return result;
}

namespace {

void check_hermitian(const CMatrix& a, const ToleranceConfig& tol) {
  require_square(a, "operator");
  require_finite(a, "operator");
  if ((a - a.adjoint()).norm() > tol.opt_tol * (1.0 + a.norm())) {
    throw Error("linalg.hermitian", "operator is not Hermitian");
  }
}

}  // namespace

CMatrix psd_power(const CMatrix& a, double exponent, const ToleranceConfig& tol) {
  check_hermitian(a, tol);
  const auto es = eigh(a);
  const RVector& w = es.eigenvalues;
  const double top = std::max(0.0, w.maxCoeff());
  if (w.minCoeff() < -tol.psd_clip * std::max(1.0, top)) {
    throw Error("linalg.psd", "operator is not positive semidefinite (min eigenvalue " +
                                  std::to_string(w.minCoeff()) + ")");
  }
  const double cut = rank_threshold(top, tol);
  RVector f = RVector::Zero(w.size());
  for (Index i = 0; i < w.size(); ++i) {
    if (top > 0.0 && w(i) > cut) f(i) = std::pow(w(i), exponent);
  }
  return es.eigenvectors * f.asDiagonal() * es.eigenvectors.adjoint();
}

CMatrix psd_sqrt(const CMatrix& a, const ToleranceConfig& tol) {
  return psd_power(a, 0.5, tol);
}

CMatrix psd_pinv(const CMatrix& a, const ToleranceConfig& tol) {
  return psd_power(a, -1.0, tol);
}

CMatrix support_projector(const CMatrix& a, const ToleranceConfig& tol) {
  check_hermitian(a, tol);
  const auto es = eigh(a);
  const double top = es.eigenvalues.cwiseAbs().maxCoeff();
  const double cut = rank_threshold(top, tol);
  CMatrix p = CMatrix::Zero(a.rows(), a.cols());
  if (top == 0.0) return p;
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (std::abs(es.eigenvalues(i)) > cut) {
      p += es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    }
  }
  return p;
}

CMatrix null_projector(const CMatrix& a, const ToleranceConfig& tol) {
  return identity(a.rows()) - support_projector(a, tol);
}

Index numerical_rank(const CMatrix& m, const ToleranceConfig& tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const RVector& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  const double cut = rank_threshold(s(0), tol);
  return static_cast<Index>((s.array() > cut).count());
}

CMatrix range_basis(const CMatrix& m, const ToleranceConfig& tol) {
  if (m.size() == 0) return CMatrix(m.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU);
  const Index r = [&] {
    const RVector& s = svd.singularValues();
    if (s(0) == 0.0) return Index{0};
    return static_cast<Index>((s.array() > rank_threshold(s(0), tol)).count());
  }();
  return svd.matrixU().leftCols(r);
}

CMatrix null_space(const CMatrix& m, double abs_threshold) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  const Index n = m.cols();
  Index keep = 0;  // number of singular values above the threshold
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > abs_threshold) ++keep;
  }
  return svd.matrixV().rightCols(n - keep);
}

CMatrix orthogonal_complement(const CMatrix& basis, const ToleranceConfig& tol) {
  const Index d = basis.rows();
  if (basis.cols() == 0) return identity(d);
  const CMatrix rest = identity(d) - basis * basis.adjoint();
  return range_basis(rest, tol);
}

CMatrix intersection_projector(const CMatrix& p, const CMatrix& q, const ToleranceConfig& tol) {
  const auto es = eigh(0.5 * (p + q));
  CMatrix out = CMatrix::Zero(p.rows(), p.cols());
  for (Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) >= 1.0 - tol.cluster_gap) {
      out += es.eigenvectors.col(i) * es.eigenvectors.col(i).adjoint();
    }
  }
  return out;
}

CMatrix sum_projector(const CMatrix& p, const CMatrix& q, const ToleranceConfig& tol) {
  CMatrix stacked(p.rows(), p.cols() + q.cols());
  stacked << p, q;
  const CMatrix basis = range_basis(stacked, tol);
  return basis * basis.adjoint();
}

bool same_projector(const CMatrix& p, const CMatrix& q, const ToleranceConfig& tol) {
  return (p - q).norm() <= tol.cluster_gap * (1.0 + p.norm());
}

bool projector_contained(const CMatrix& p, const CMatrix& q, const ToleranceConfig& tol) {
  return (p - q * p).norm() <= tol.cluster_gap * (1.0 + p.norm());
}

std::vector<Eigenspace> cluster_eigenspaces(const HermitianEigensystem& e,
                                            const ToleranceConfig& tol) {
  std::vector<Eigenspace> out;
  const Index n = e.eigenvalues.size();
  Index start = 0;
  for (Index i = 1; i <= n; ++i) {
    const bool split =
        i == n || e.eigenvalues(i) - e.eigenvalues(i - 1) >
                      tol.cluster_gap * (1.0 + std::abs(e.eigenvalues(i)));
    if (!split) continue;
    Eigenspace s;
    s.eigenvalue = e.eigenvalues.segment(start, i - start).mean();
    s.basis = e.eigenvectors.middleCols(start, i - start);
    out.push_back(std::move(s));
    start = i;
  }
  return out;
}

}  // namespace fidopt
