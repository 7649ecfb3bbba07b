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

#include <string_view>

namespace fidopt {

/// Numerical thresholds used everywhere an exact-arithmetic statement has to
/// be decided in floating point.
///
/// All fields are relative unless noted:
///  - rank_tol_factor: singular values / eigenvalues below
///    rank_tol_factor * max(largest one, 1) count as zero.
///  - cluster_gap: eigenvalues within cluster_gap * (1 + |lambda|) are merged;
///    also the projector-distance tolerance for subspace comparisons.
///  - psd_clip: absolute slack for negative eigenvalues of PSD inputs.
///  - opt_tol: optimality / parallelism / completeness tolerance.
struct ToleranceConfig {
  double rank_tol_factor = 1e-10;
  double cluster_gap = 1e-8;
  double psd_clip = 1e-10;
  double opt_tol = 1e-9;

  static ToleranceConfig strict();
  static ToleranceConfig loose();

  /// "strict" | "default" | "loose"; throws fidopt::Error otherwise.
  static ToleranceConfig from_profile(std::string_view name);

  /// Throws fidopt::Error unless every field is strictly positive and finite.
  void validate() const;
};

}  // namespace fidopt
