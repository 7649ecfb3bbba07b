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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fidopt/linalg.hpp"
#include "fidopt/quantum.hpp"

namespace fidopt::harness {

/// Seeded generator with every derived distribution implemented here, so the
/// stream of numbers does not depend on the standard library vendor.
class Prng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller).
  double normal();
  Complex complex_normal();
  /// Index drawn from the (not necessarily normalized) weights.
  std::size_t categorical(const std::vector<double>& weights);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

enum class Structure { kGeneric, kCommutingSupports, kCommutingStates, kPureSigma, kSingularSum };

std::string structure_name(Structure s);
/// Throws "instance.structure" for unknown names.
Structure parse_structure(std::string_view name);

struct InstanceSpec {
  Index dim = 2;
  Index rank_rho = 2;
  Index rank_sigma = 2;
  std::uint64_t seed = 0;
  Structure structure = Structure::kGeneric;
};

struct StatePair {
  DensityOperator rho;
  DensityOperator sigma;
};

/// Deterministic in the spec. Throws "instance.infeasible" when the ranks
/// cannot realize the requested structure.
StatePair generate_instance(const InstanceSpec& spec, const ToleranceConfig& tol = {});

CMatrix haar_unitary(Index d, Prng& rng);
/// Unit-trace PSD operator with `rank` eigenvalues uniform in [0.1, 1]
/// (before normalization) in a Haar-random eigenbasis of span(basis).
CMatrix random_psd_in(const CMatrix& basis, Index rank, Prng& rng);
CMatrix random_density(Index d, Index rank, Prng& rng);
CVector random_unit_vector(Index d, Prng& rng);

/// k-outcome POVM E_m = S^{-1/2} X_m X_m^dagger S^{-1/2} with Gaussian X_m.
Povm random_povm(Index d, std::size_t k, Prng& rng, const ToleranceConfig& tol = {});
/// Column-stochastic matrix of shape rows x cols.
CoarseGrainingMap random_stochastic(Index rows, Index cols, Prng& rng);

}  // namespace fidopt::harness
