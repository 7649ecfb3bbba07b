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
#include "fidopt/harness/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fidopt/divergences.hpp"
#include "fidopt/error.hpp"

namespace fidopt::harness {

std::vector<GridPoint> qubit_grid(const DensityOperator& rho, const DensityOperator& sigma,
                                  std::size_t n) {
  if (rho.dim() != 2 || sigma.dim() != 2) {
    throw Error("oracle.dimension", "the qubit grid oracle needs d = 2");
  }
  if (n < 2) throw Error("oracle.grid", "grid size must be at least 2");
  const BlochVector a = bloch_vector(rho.matrix());
  const BlochVector b = bloch_vector(sigma.matrix());
  std::vector<GridPoint> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      const BlochVector v(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                          std::cos(theta));
      const double p = std::clamp(0.5 * (1.0 + a.dot(v)), 0.0, 1.0);
      const double q = std::clamp(0.5 * (1.0 + b.dot(v)), 0.0, 1.0);
      const double bc = std::sqrt(p * q) + std::sqrt((1.0 - p) * (1.0 - q));
      out.push_back({v, bc * bc, std::abs(p - q)});
    }
  }
  return out;
}

OracleReport qubit_grid_oracle(const DensityOperator& rho, const DensityOperator& sigma,
                               std::size_t n) {
  OracleReport r;
  r.exact_f = fidelity(rho, sigma);
  r.exact_d = trace_distance(rho, sigma);
  for (const auto& g : qubit_grid(rho, sigma, n)) {
    r.best_f = std::min(r.best_f, g.f);
    r.best_d = std::max(r.best_d, g.d);
    ++r.evaluated;
  }
  return r;
}

OracleReport random_povm_oracle(const DensityOperator& rho, const DensityOperator& sigma,
                                std::size_t k, std::uint64_t seed, const ToleranceConfig& tol) {
  OracleReport r;
  r.exact_f = fidelity(rho, sigma);
  r.exact_d = trace_distance(rho, sigma);
  Prng rng(seed);
  const auto d = static_cast<std::size_t>(rho.dim());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t outcomes = 2 + static_cast<std::size_t>(rng.next() % (d + 1));
    const Povm e = random_povm(rho.dim(), outcomes, rng, tol);
    r.best_f = std::min(r.best_f, induced_fidelity(e, rho, sigma));
    r.best_d = std::max(r.best_d, induced_trace_distance(e, rho, sigma));
    ++r.evaluated;
  }
  return r;
}

}  // namespace fidopt::harness
