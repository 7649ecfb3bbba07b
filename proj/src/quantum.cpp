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
#include "fidopt/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fidopt/error.hpp"

namespace fidopt {

namespace {

// Object-level invariants are stated at 1e-10 / 1e-9; the loose profile may
// relax them further but never tightens past these.
double state_tol(const ToleranceConfig& tol) { return std::max(1e-10, tol.opt_tol); }
double completeness_tol(const ToleranceConfig& tol) { return std::max(1e-9, tol.opt_tol); }

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += '+';
    out += l;
  }
  return out;
}

}  // namespace

DensityOperator DensityOperator::from_matrix(const CMatrix& m, const ToleranceConfig& tol) {
  require_square(m, "density operator");
  require_finite(m, "density operator");
  const double herm = (m - m.adjoint()).norm();
  if (herm > state_tol(tol) * (1.0 + m.norm())) {
    throw Error("density.hermitian", "density operator is not Hermitian (defect " +
                                         std::to_string(herm) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > state_tol(tol)) {
    throw Error("density.trace", "density operator must have unit trace (got " +
                                     std::to_string(tr.real()) + ")");
  }
  DensityOperator d;
  d.matrix_ = hermitian_part(m);
  d.spectrum_ = eigh(d.matrix_);
  if (d.spectrum_.eigenvalues.minCoeff() < -tol.psd_clip) {
    throw Error("density.positive", "density operator has a negative eigenvalue " +
                                        std::to_string(d.spectrum_.eigenvalues.minCoeff()));
  }
  d.sqrt_ = psd_sqrt(d.matrix_, tol);
  d.support_ = support_projector(d.matrix_, tol);
  return d;
}

Index DensityOperator::rank() const {
  return static_cast<Index>(std::lround(support_.trace().real()));
}

Povm Povm::from_elements(std::vector<PovmElement> elements, const ToleranceConfig& tol) {
  if (elements.empty()) throw Error("povm.nonempty", "POVM has no elements");
  const Index d = elements.front().op.rows();
  CMatrix total = CMatrix::Zero(d, d);
  for (auto& el : elements) {
    if (el.op.rows() != d || el.op.cols() != d) {
      throw Error("povm.dimension", "POVM element '" + el.label + "' has mismatched dimensions");
    }
    require_finite(el.op, "POVM element");
    if ((el.op - el.op.adjoint()).norm() > completeness_tol(tol) * (1.0 + el.op.norm())) {
      throw Error("povm.hermitian", "POVM element '" + el.label + "' is not Hermitian");
    }
    el.op = hermitian_part(el.op);
    const double lo = eigh(el.op).eigenvalues.minCoeff();
    if (lo < -tol.psd_clip * std::max(1.0, el.op.norm())) {
      throw Error("povm.positive", "POVM element '" + el.label +
                                       "' has negative eigenvalue " + std::to_string(lo));
    }
    total += el.op;
  }
  const double defect = (total - identity(d)).norm();
  if (defect > completeness_tol(tol)) {
    throw Error("povm.completeness",
                "POVM elements do not sum to the identity (defect " + std::to_string(defect) + ")");
  }
  Povm p;
  p.elements_ = std::move(elements);
  p.is_pvm_ = std::all_of(p.elements_.begin(), p.elements_.end(), [&](const PovmElement& el) {
    return (el.op * el.op - el.op).norm() <= completeness_tol(tol);
  });
  if (p.is_pvm_) {
    for (std::size_t i = 0; i < p.size() && p.is_pvm_; ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if ((p.elements_[i].op * p.elements_[j].op).norm() > completeness_tol(tol)) {
          p.is_pvm_ = false;
          break;
        }
      }
    }
  }
  return p;
}

Povm Povm::from_operators(const std::vector<CMatrix>& ops, const ToleranceConfig& tol) {
  std::vector<PovmElement> els;
  els.reserve(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    els.push_back({"E" + std::to_string(i), ops[i]});
  }
  return from_elements(std::move(els), tol);
}

void CoarseGrainingMap::validate() const {
  if (s.size() == 0) throw Error("coarse_graining.stochastic", "empty stochastic matrix");
  if (!s.allFinite() || (s.array() < 0.0).any()) {
    throw Error("coarse_graining.stochastic", "stochastic matrix has negative entries");
  }
  for (Index k = 0; k < s.cols(); ++k) {
    if (std::abs(s.col(k).sum() - 1.0) > 1e-12) {
      throw Error("coarse_graining.stochastic",
                  "column " + std::to_string(k) + " of the stochastic matrix does not sum to 1");
    }
  }
}

CMatrix element_sum(const Povm& e) {
  CMatrix total = CMatrix::Zero(e.dim(), e.dim());
  for (const auto& el : e) total += el.op;
  return total;
}

OutcomeDistribution measure(const Povm& e, const CMatrix& state) {
  if (state.rows() != e.dim() || state.cols() != e.dim()) {
    throw Error("measure.dimension", "state and POVM dimensions differ");
  }
  OutcomeDistribution out;
  out.labels.reserve(e.size());
  out.probabilities.reserve(e.size());
  // Probabilities at the rounding floor of tr(E state) are reported as exact zeros.
  const double floor = 8.0 * static_cast<double>(e.dim()) *
                       std::numeric_limits<double>::epsilon() * state.norm();
  for (const auto& el : e) {
    out.labels.push_back(el.label);
    const double p = (el.op * state).trace().real();
    out.probabilities.push_back(p <= floor * el.op.norm() ? 0.0 : p);
  }
  return out;
}

OutcomeDistribution measure(const Povm& e, const DensityOperator& rho) {
  return measure(e, rho.matrix());
}

Povm coarse_grain(const Povm& e, const CoarseGrainingMap& s, const ToleranceConfig& tol) {
  s.validate();
  if (static_cast<std::size_t>(s.s.cols()) != e.size()) {
    throw Error("coarse_graining.shape", "stochastic matrix columns do not match POVM size");
  }
  std::vector<PovmElement> out;
  for (Index j = 0; j < s.s.rows(); ++j) {
    CMatrix a = CMatrix::Zero(e.dim(), e.dim());
    std::vector<std::string> merged;
    bool pure_merge = true;
    for (Index k = 0; k < s.s.cols(); ++k) {
      const double w = s.s(j, k);
      if (w == 0.0) continue;
      a += w * e[static_cast<std::size_t>(k)].op;
      merged.push_back(e[static_cast<std::size_t>(k)].label);
      if (w != 1.0) pure_merge = false;
    }
    std::string label = pure_merge && !merged.empty() ? join_labels(merged)
                                                       : "C" + std::to_string(j);
    out.push_back({std::move(label), std::move(a)});
  }
  return Povm::from_elements(std::move(out), tol);
}

namespace {

bool is_zero_element(const CMatrix& op, const ToleranceConfig& tol) {
  return op.norm() <= tol.opt_tol * std::sqrt(static_cast<double>(op.rows()));
}

// ||A - r B|| <= opt_tol ||A|| with r = <B,A>/<B,B> >= 0.
bool proportional(const CMatrix& a, const CMatrix& b, const ToleranceConfig& tol) {
  const double bb = hs_inner(b, b).real();
  if (bb == 0.0) return false;
  const double r = hs_inner(b, a).real() / bb;
  if (r < 0.0) return false;
  return (a - r * b).norm() <= tol.opt_tol * a.norm();
}

}  // namespace

Povm simplify(const Povm& e, const ToleranceConfig& tol) {
  struct Group {
    CMatrix representative;
    CMatrix total;
    std::vector<std::string> labels;
  };
  std::vector<Group> groups;
  for (const auto& el : e) {
    if (is_zero_element(el.op, tol)) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return proportional(el.op, g.representative, tol);
    });
    if (it == groups.end()) {
      groups.push_back({el.op, el.op, {el.label}});
    } else {
      it->total += el.op;
      it->labels.push_back(el.label);
    }
  }
  std::vector<PovmElement> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.push_back({join_labels(g.labels), std::move(g.total)});
  return Povm::from_elements(std::move(out), tol);
}

bool is_simple(const Povm& e, const ToleranceConfig& tol) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (is_zero_element(e[i].op, tol)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(e[i].op, e[j].op, tol)) return false;
    }
  }
  return true;
}

bool equivalent(const Povm& a, const Povm& b, const ToleranceConfig& tol) {
  if (a.dim() != b.dim()) return false;
  const Povm sa = simplify(a, tol);
  const Povm sb = simplify(b, tol);
  if (sa.size() != sb.size()) return false;
  std::vector<bool> used(sb.size(), false);
  for (const auto& x : sa) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = sb.size();
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (used[j]) continue;
      const double dist = (x.op - sb[j].op).norm();
      if (dist < best) {
        best = dist;
        best_j = j;
      }
    }
    if (best_j == sb.size() || best > tol.opt_tol * (1.0 + x.op.norm())) return false;
    used[best_j] = true;
  }
  return true;
}

bool commuting_povms(const Povm& a, const Povm& b, const ToleranceConfig& tol) {
  if (a.dim() != b.dim()) return false;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const double scale = std::max(1.0, x.op.norm() * y.op.norm());
      if (commutator_norm(x.op, y.op) > tol.opt_tol * scale) return false;
    }
  }
  return true;
}

Compatibility compatibility(const Povm& a, const Povm& b, const ToleranceConfig& tol) {
  const bool commute = commuting_povms(a, b, tol);
  if (commute) return Compatibility::kCompatible;
  if (a.is_pvm() && b.is_pvm()) return Compatibility::kIncompatible;
  return Compatibility::kUndecided;
}

}  // namespace fidopt
