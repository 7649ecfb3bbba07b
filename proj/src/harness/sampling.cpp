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
#include "fidopt/harness/sampling.hpp"

#include <cmath>

#include "fidopt/divergences.hpp"
#include "fidopt/error.hpp"
#include "fidopt/harness/random.hpp"

namespace fidopt::harness {

namespace {

std::vector<double> draw(const std::vector<double>& probs, std::size_t shots, Prng& rng) {
  std::vector<double> counts(probs.size(), 0.0);
  for (std::size_t s = 0; s < shots; ++s) counts[rng.categorical(probs)] += 1.0;
  for (auto& c : counts) c /= static_cast<double>(shots);
  return counts;
}

}  // namespace

SampleReport sample_outcomes(const OutcomeDistribution& p, const OutcomeDistribution& q,
                             std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw Error("sample.shots", "shots must be at least 1");
  if (p.size() != q.size()) throw Error("distribution.labels", "distributions differ in size");
  Prng rng(seed);
  OutcomeDistribution ph{p.labels, draw(p.probabilities, shots, rng)};
  OutcomeDistribution qh{q.labels, draw(q.probabilities, shots, rng)};

  SampleReport r;
  r.shots = shots;
  r.seed = seed;
  const double n = static_cast<double>(shots);
  r.bc_exact = bhattacharyya(p, q);
  r.bc_hat = bhattacharyya(ph, qh);
  r.bc_se = std::sqrt(std::max(0.0, 1.0 - r.bc_hat * r.bc_hat) / (2.0 * n));
  r.tv_exact = total_variation(p, q);
  r.tv_hat = total_variation(ph, qh);
  double sp = 0.0;
  double sq = 0.0;
  double s2p = 0.0;
  double s2q = 0.0;
  for (std::size_t m = 0; m < ph.size(); ++m) {
    const double diff = ph.probabilities[m] - qh.probabilities[m];
    const double s = diff > 0.0 ? 1.0 : (diff < 0.0 ? -1.0 : 0.0);
    sp += s * ph.probabilities[m];
    sq += s * qh.probabilities[m];
    s2p += s * s * ph.probabilities[m];
    s2q += s * s * qh.probabilities[m];
  }
  r.tv_se = 0.5 * std::sqrt(std::max(0.0, s2p - sp * sp + s2q - sq * sq) / n);
  return r;
}

SampleReport sample_measurement(const Povm& e, const DensityOperator& rho,
                                const DensityOperator& sigma, std::size_t shots,
                                std::uint64_t seed) {
  return sample_outcomes(measure(e, rho), measure(e, sigma), shots, seed);
}

}  // namespace fidopt::harness
