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

#include <string>
#include <vector>

#include "fidopt/linalg.hpp"
#include "fidopt/tolerance.hpp"

namespace fidopt {

/// Positive unit-trace operator with cached spectral data.
class DensityOperator {
 public:
  /// Validates Hermiticity (1e-10), unit trace (1e-10) and positivity
  /// (psd_clip); the stored matrix is the Hermitian part of the input.
  static DensityOperator from_matrix(const CMatrix& m,
                                     const ToleranceConfig& tol = {});

  Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }
  const HermitianEigensystem& spectrum() const { return spectrum_; }
  const CMatrix& sqrt() const { return sqrt_; }
  const CMatrix& support() const { return support_; }
  CMatrix null_projector() const { return identity(dim()) - support_; }
  Index rank() const;
  bool is_pure() const { return rank() == 1; }

 private:
  DensityOperator() = default;

  CMatrix matrix_;
  HermitianEigensystem spectrum_;
  CMatrix sqrt_;
  CMatrix support_;
};

struct PovmElement {
  std::string label;
  CMatrix op;
};

/// Finite list of labelled positive operators summing to the identity.
class Povm {
 public:
  /// Throws fidopt::Error naming the violated invariant.
  static Povm from_elements(std::vector<PovmElement> elements,
                            const ToleranceConfig& tol = {});
  /// Labels E0, E1, ...
  static Povm from_operators(const std::vector<CMatrix>& ops,
                             const ToleranceConfig& tol = {});

  std::size_t size() const { return elements_.size(); }
  Index dim() const { return elements_.front().op.rows(); }
  const PovmElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<PovmElement>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  bool is_pvm() const { return is_pvm_; }

 private:
  std::vector<PovmElement> elements_;
  bool is_pvm_ = false;
};

/// Row-stochastic in the sense of the coarse-graining relation
/// A_j = sum_k S_jk B_k: entries >= 0 and every column sums to one.
struct CoarseGrainingMap {
  Eigen::MatrixXd s;

  /// Throws "coarse_graining.stochastic" unless entries >= 0 and column
  /// sums are 1 within 1e-12.
  void validate() const;
};

struct OutcomeDistribution {
  std::vector<std::string> labels;
  std::vector<double> probabilities;

  std::size_t size() const { return probabilities.size(); }
};

OutcomeDistribution measure(const Povm& e, const DensityOperator& rho);
OutcomeDistribution measure(const Povm& e, const CMatrix& state);

Povm coarse_grain(const Povm& e, const CoarseGrainingMap& s,
                  const ToleranceConfig& tol = {});

/// Drops zero elements and sums mutually proportional ones (labels joined
/// with '+').
Povm simplify(const Povm& e, const ToleranceConfig& tol = {});
bool is_simple(const Povm& e, const ToleranceConfig& tol = {});

/// Equivalence of the simplified POVMs: a bijection matching elements within
/// opt_tol (relative Frobenius distance).
bool equivalent(const Povm& a, const Povm& b, const ToleranceConfig& tol = {});

/// Every pair of elements commutes (commutator norm <= opt_tol).
bool commuting_povms(const Povm& a, const Povm& b, const ToleranceConfig& tol = {});

enum class Compatibility { kCompatible, kIncompatible, kUndecided };

/// Joint measurability, decided only when both are PVMs (compatible iff they
/// commute). Non-PVM inputs give kUndecided unless they commute, in which
/// case they are compatible.
Compatibility compatibility(const Povm& a, const Povm& b, const ToleranceConfig& tol = {});

/// Sum of all elements; identity for a valid POVM.
CMatrix element_sum(const Povm& e);

}  // namespace fidopt
