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
#include "fidopt/harness/random.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>

#include "fidopt/error.hpp"

namespace fidopt::harness {

double Prng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Prng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

Complex Prng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::size_t Prng::categorical(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += std::max(0.0, w);
  const double u = uniform() * total;
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last = i;
    if (u < acc) return i;
  }
  return last;
}

std::string structure_name(Structure s) {
  switch (s) {
    case Structure::kGeneric: return "generic";
    case Structure::kCommutingSupports: return "commuting-supports";
    case Structure::kCommutingStates: return "commuting-states";
    case Structure::kPureSigma: return "pure-sigma";
    case Structure::kSingularSum: return "singular-sum";
  }
  return "generic";
}

Structure parse_structure(std::string_view name) {
  for (auto s : {Structure::kGeneric, Structure::kCommutingSupports, Structure::kCommutingStates,
                 Structure::kPureSigma, Structure::kSingularSum}) {
    if (structure_name(s) == name) return s;
  }
  throw Error("instance.structure", "unknown structure '" + std::string(name) + "'");
}

CMatrix haar_unitary(Index d, Prng& rng) {
  CMatrix g(d, d);
  for (Index c = 0; c < d; ++c) {
    for (Index r = 0; r < d; ++r) g(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (Index i = 0; i < d; ++i) {
    const Complex z = r(i, i);
    if (std::abs(z) > 0.0) q.col(i) *= z / std::abs(z);
  }
  return q;
}

CMatrix random_psd_in(const CMatrix& basis, Index rank, Prng& rng) {
  const Index k = basis.cols();
  RVector spec = RVector::Zero(k);
  for (Index i = 0; i < rank; ++i) spec(i) = rng.uniform(0.1, 1.0);
  spec /= spec.sum();
  const CMatrix v = haar_unitary(k, rng);
  return hermitian_part(basis * v * spec.asDiagonal() * v.adjoint() * basis.adjoint());
}

CMatrix random_density(Index d, Index rank, Prng& rng) {
  return random_psd_in(identity(d), rank, rng);
}

CVector random_unit_vector(Index d, Prng& rng) {
  CVector v(d);
  for (Index i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return v.normalized();
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("instance.infeasible", what);
}

}  // namespace

StatePair generate_instance(const InstanceSpec& spec, const ToleranceConfig& tol) {
  const Index d = spec.dim;
  const Index rr = spec.rank_rho;
  const Index rs = spec.rank_sigma;
  require(d >= 1 && rr >= 1 && rs >= 1 && rr <= d && rs <= d, "ranks must lie in [1, dim]");
  Prng rng(spec.seed);
  CMatrix rho;
  CMatrix sigma;
  switch (spec.structure) {
    case Structure::kGeneric:
      rho = random_density(d, rr, rng);
      sigma = random_density(d, rs, rng);
      break;
    case Structure::kCommutingSupports: {
      require(rr + rs >= d, "commuting-supports needs rank_rho + rank_sigma >= dim");
      const CMatrix u = haar_unitary(d, rng);
      // columns: [Null(sigma) only | intersection | Null(rho) only]
      rho = random_psd_in(u.leftCols(rr), rr, rng);
      sigma = random_psd_in(u.rightCols(rs), rs, rng);
      break;
    }
    case Structure::kCommutingStates: {
      require(rr + rs >= d, "commuting-states needs rank_rho + rank_sigma >= dim");
      const CMatrix u = haar_unitary(d, rng);
      RVector a = RVector::Zero(d);
      RVector b = RVector::Zero(d);
      for (Index i = 0; i < rr; ++i) a(i) = rng.uniform(0.1, 1.0);
      for (Index i = d - rs; i < d; ++i) b(i) = rng.uniform(0.1, 1.0);
      a /= a.sum();
      b /= b.sum();
      rho = hermitian_part(u * a.asDiagonal() * u.adjoint());
      sigma = hermitian_part(u * b.asDiagonal() * u.adjoint());
      break;
    }
    case Structure::kPureSigma: {
      require(rs == 1, "pure-sigma needs rank_sigma = 1");
      require(rr >= d - 1, "pure-sigma needs rank_rho >= dim - 1");
      rho = random_density(d, rr, rng);
      const CVector psi = random_unit_vector(d, rng);
      sigma = psi * psi.adjoint();
      break;
    }
    case Structure::kSingularSum: {
      require(d >= 2, "singular-sum needs dim >= 2");
      require(rr <= d - 1 && rs <= d - 1 && rr + rs >= d - 1,
              "singular-sum needs ranks <= dim - 1 with rank_rho + rank_sigma >= dim - 1");
      const CMatrix u = haar_unitary(d, rng);
      const CMatrix s = u.leftCols(d - 1);
      rho = random_psd_in(s, rr, rng);
      const CMatrix w = haar_unitary(d - 1, rng);
      sigma = random_psd_in(s * w, rs, rng);
      break;
    }
  }
  return StatePair{DensityOperator::from_matrix(rho, tol), DensityOperator::from_matrix(sigma, tol)};
}

Povm random_povm(Index d, std::size_t k, Prng& rng, const ToleranceConfig& tol) {
  std::vector<CMatrix> g;
  CMatrix total = CMatrix::Zero(d, d);
  for (std::size_t m = 0; m < k; ++m) {
    CMatrix x(d, d);
    for (Index c = 0; c < d; ++c) {
      for (Index r = 0; r < d; ++r) x(r, c) = rng.complex_normal();
    }
    g.push_back(x * x.adjoint());
    total += g.back();
  }
  const CMatrix s = psd_power(hermitian_part(total), -0.5, tol);
  for (auto& m : g) m = hermitian_part(s * m * s);
  return Povm::from_operators(g, tol);
}

CoarseGrainingMap random_stochastic(Index rows, Index cols, Prng& rng) {
  CoarseGrainingMap s{Eigen::MatrixXd(rows, cols)};
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) s.s(r, c) = rng.uniform();
    s.s.col(c) /= s.s.col(c).sum();
  }
  return s;
}

}  // namespace fidopt::harness
