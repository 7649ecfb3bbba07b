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
#include "doctest.h"

#include "fidopt/divergences.hpp"
#include "fidopt/error.hpp"
#include "fidopt/generalized_eigen.hpp"
#include "fidopt/geometric_mean.hpp"
#include "fidopt/harness/random.hpp"
#include "fidopt/pencil.hpp"
#include "support.hpp"

using namespace fidopt;
using namespace fidopt::testing;

namespace {

const PencilEigenpair* find_lambda(const PencilEigensystem& es, double lambda, double tol) {
  for (const auto& p : es.finite) {
    if (std::abs(p.lambda - lambda) <= tol) return &p;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("pencil") {

TEST_CASE("polar unitary for commuting diagonal states") {
  const auto rho = state(diag({0.5, 0.3, 0.2}));
  const auto sigma = state(diag({0.1, 0.6, 0.3}));
  CHECK(polar_residual(rho, sigma, identity(3)) < 1e-12);
  const auto u = construct_polar_unitary(rho, sigma);
  CHECK(polar_residual(rho, sigma, u.u) < 1e-12);
}

TEST_CASE("polar unitary for the qutrit pair") {
  const auto rho = state(qutrit_rho());
  const auto sigma = state(qutrit_sigma());
  const CMatrix given = qutrit_unitary();
  CHECK((given * given.adjoint() - identity(3)).norm() < 1e-12);
  CHECK(polar_residual(rho, sigma, given) < 1e-9);
  const auto u = construct_polar_unitary(rho, sigma);
  CHECK(polar_residual(rho, sigma, u.u) < 1e-9);
  CHECK((u.u * u.u.adjoint() - identity(3)).norm() < 1e-10);
  CHECK(u.rank == 1);
  CHECK(u.aligned);
}

TEST_CASE("polar unitary on random full-rank pairs") {
  harness::Prng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = state(harness::random_density(4, 4, rng));
    const auto sigma = state(harness::random_density(4, 4, rng));
    const auto u = construct_polar_unitary(rho, sigma);
    CHECK(polar_residual(rho, sigma, u.u) < 1e-9);
    CHECK((u.u * u.u.adjoint() - identity(4)).norm() < 1e-10);
  }
}

TEST_CASE("polar unitary requires a nonsingular sum") {
  const auto rho = state(diag({1.0, 0.0, 0.0}));
  const auto sigma = state(diag({0.0, 1.0, 0.0}));
  CHECK_THROWS_AS(construct_polar_unitary(rho, sigma), Error);
  CHECK(polar_residual(rho, sigma, polar_unitary_any(rho, sigma).u) < 1e-12);
}

TEST_CASE("qutrit pencil with the explicit unitary") {
  const auto rho = state(qutrit_rho());
  const auto sigma = state(qutrit_sigma());
  const CMatrix k = sigma.sqrt();
  const CMatrix l = qutrit_unitary() * rho.sqrt();
  const auto es = pencil_eigensystem(k, l, {1.0});
  CHECK_FALSE(es.singular());
  REQUIRE(es.finite.size() == 2);
  CHECK(es.finite[0].lambda == doctest::Approx(0.0));
  CHECK(es.finite[1].lambda == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(es.finite[0].basis.cols() == 1);
  REQUIRE(es.finite[1].basis.cols() == 1);
  CHECK(same_ray(es.finite[0].basis.col(0), ket({1.0, 0.0, 0.0}), 1e-9));
  CHECK(same_ray(es.finite[1].basis.col(0), ket({0.0, 1.0, 0.0}), 1e-9));
  REQUIRE(es.infinite_basis.cols() == 1);
  CHECK(same_ray(es.infinite_basis.col(0), ket({0.0, 0.0, 1.0}), 1e-9));
}

TEST_CASE("qutrit pencil with the constructed unitary") {
  const auto rho = state(qutrit_rho());
  const auto sigma = state(qutrit_sigma());
  const auto es = pencil_eigensystem(rho, sigma, construct_polar_unitary(rho, sigma));
  REQUIRE(es.finite.size() == 2);
  CHECK(same_ray(es.finite[0].basis.col(0), ket({1.0, 0.0, 0.0}), 1e-9));
  CHECK(same_ray(es.finite[1].basis.col(0), ket({0.0, 1.0, 0.0}), 1e-9));
  CHECK(same_ray(es.infinite_basis.col(0), ket({0.0, 0.0, 1.0}), 1e-9));
}

TEST_CASE("diagonal pencil eigenvalues are sqrt(sigma_i / rho_i)") {
  const double r[] = {0.4, 0.35, 0.25};
  const double s[] = {0.1, 0.5, 0.4};
  const auto rho = state(diag({r[0], r[1], r[2]}));
  const auto sigma = state(diag({s[0], s[1], s[2]}));
  const auto es = pencil_eigensystem(rho, sigma, construct_polar_unitary(rho, sigma));
  REQUIRE(es.finite.size() == 3);
  CHECK(es.infinite_basis.cols() == 0);
  for (int i = 0; i < 3; ++i) {
    const auto* p = find_lambda(es, std::sqrt(s[i] / r[i]), 1e-9);
    REQUIRE(p != nullptr);
    REQUIRE(p->basis.cols() == 1);
    CHECK(std::abs(std::abs(p->basis(i, 0)) - 1.0) < 1e-9);
  }
}

TEST_CASE("pure qubit pair: null directions of the pencil") {
  const auto rho = state(proj(zero_ket()));
  const auto sigma = state(proj(plus_ket()));
  const auto u = construct_polar_unitary(rho, sigma);
  const auto es = pencil_eigensystem(rho, sigma, u);
  CHECK(es.singular());
  const CMatrix k = sigma.sqrt();
  const CMatrix l = u.u * rho.sqrt();
  // lambda = 0 eigenvector is orthogonal to sigma, infinity is |1>.
  const CMatrix n0 = pencil_null_space(k, l, 0.0);
  REQUIRE(n0.cols() == 1);
  CHECK(same_ray(n0.col(0), minus_ket(), 1e-9));
  const CMatrix ninf = pencil_null_space(k, l, std::nullopt);
  REQUIRE(ninf.cols() == 1);
  CHECK(same_ray(ninf.col(0), one_ket(), 1e-9));
}

TEST_CASE("generalized eigenvalues of a regular pencil") {
  CMatrix k = diag({1.0, 2.0, 3.0});
  CMatrix l = diag({1.0, 4.0, 0.0});
  const auto ev = generalized_eigenvalues(k, l);
  REQUIRE(ev.size() == 3);
  std::vector<double> finite;
  int infinite = 0;
  for (const auto& h : ev) {
    if (std::abs(h.beta) < 1e-12) {
      ++infinite;
    } else {
      finite.push_back((h.alpha / h.beta).real());
    }
  }
  std::sort(finite.begin(), finite.end());
  CHECK(infinite == 1);
  REQUIRE(finite.size() == 2);
  CHECK(finite[0] == doctest::Approx(0.5));
  CHECK(finite[1] == doctest::Approx(1.0));
}

TEST_CASE("pencil eigenvalues match the geometric mean on random pairs") {
  const ToleranceConfig tol;
  harness::Prng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Index d = 2 + trial % 4;
    const auto rho = state(harness::random_density(d, d, rng));
    const auto sigma = state(harness::random_density(d, 1 + trial % d, rng));
    const auto es = pencil_eigensystem(rho, sigma, construct_polar_unitary(rho, sigma));
    const auto gm = geometric_mean(psd_pinv(rho.matrix(), tol), sigma.matrix(), tol);
    for (const auto& space : gm.eigenspaces) {
      const auto* p = find_lambda(es, space.eigenvalue, 1e-7 * (1.0 + space.eigenvalue));
      REQUIRE(p != nullptr);
      CHECK(p->basis.cols() == space.dim());
      CHECK(p->residual < 1e-8);
    }
  }
}

TEST_CASE("parallel test branches") {
  const auto rho = state(proj(zero_ket()));
  const auto sigma = state(proj(plus_ket()));
  const auto u = construct_polar_unitary(rho, sigma);
  const auto null = parallel_check(proj(one_ket()), rho, sigma, u.u);
  CHECK(null.parallel);
  CHECK_FALSE(null.kappa.has_value());
  CHECK_FALSE(parallel_check(identity(2), rho, sigma, u.u).parallel);

  const ToleranceConfig tol;
  harness::Prng rng(10);
  const auto r = state(harness::random_density(3, 3, rng));
  const auto s = state(harness::random_density(3, 3, rng));
  const auto gm = geometric_mean(psd_pinv(r.matrix(), tol), s.matrix(), tol);
  const auto ur = construct_polar_unitary(r, s);
  for (const auto& space : gm.eigenspaces) {
    const auto res = parallel_check(space.projector(), r, s, ur.u);
    CHECK(res.parallel);
    REQUIRE(res.kappa.has_value());
    CHECK(*res.kappa == doctest::Approx(space.eigenvalue).epsilon(1e-8));
  }
}

TEST_CASE("parallel_test on explicit matrices") {
  const CMatrix a = diag({1.0, 2.0});
  CHECK(parallel_test(a, 3.0 * a, 1.0).parallel);
  CHECK(*parallel_test(a, 3.0 * a, 1.0).kappa == doctest::Approx(3.0));
  CHECK_FALSE(parallel_test(a, -3.0 * a, 1.0).parallel);
  CHECK_FALSE(parallel_test(a, diag({1.0, 0.0}), 1.0).parallel);
  CHECK(parallel_test(CMatrix::Zero(2, 2), a, 1.0).parallel);
}

}  // TEST_SUITE
