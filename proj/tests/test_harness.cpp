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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fidopt/divergences.hpp"
#include "fidopt/error.hpp"
#include "fidopt/fidelity_optimal.hpp"
#include "fidopt/harness/cli.hpp"
#include "fidopt/harness/io.hpp"
#include "fidopt/harness/oracle.hpp"
#include "fidopt/harness/random.hpp"
#include "fidopt/harness/sampling.hpp"
#include "fidopt/trace_optimal.hpp"
#include "support.hpp"

using namespace fidopt;
using namespace fidopt::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "fidopt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = harness::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("fidopt-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

void write_state(const std::string& path, const CMatrix& m) {
  io::write_text_file(path, io::dump(io::matrix_to_json(m)));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("PRNG is reproducible") {
  harness::Prng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  for (int i = 0; i < 100; ++i) CHECK(a.normal() == b.normal());
  harness::Prng c(1);
  double sum = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = c.normal();
    sum += x;
    sq += x * x;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sq / n - 1.0) < 0.05);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < n; ++i) ++counts[c.categorical({0.2, 0.0, 0.8})];
  CHECK(counts[1] == 0);
  CHECK(std::abs(counts[0] / double(n) - 0.2) < 0.02);
}

TEST_CASE("instance generation") {
  const auto s = harness::generate_instance({3, 2, 2, 7, harness::Structure::kCommutingSupports});
  CHECK(commutator_norm(s.rho.support(), s.sigma.support()) < 1e-12);
  const auto g = harness::generate_instance({2, 1, 1, 1, harness::Structure::kGeneric});
  CHECK(g.rho.is_pure());
  CHECK(g.sigma.is_pure());
  const double f = fidelity(g.rho, g.sigma);
  CHECK(f > 0.0);
  CHECK(f < 1.0);
  const auto again = harness::generate_instance({2, 1, 1, 1, harness::Structure::kGeneric});
  CHECK((again.rho.matrix() - g.rho.matrix()).norm() == 0.0);
  const auto c = harness::generate_instance({4, 3, 2, 9, harness::Structure::kCommutingStates});
  CHECK(commutator_norm(c.rho.matrix(), c.sigma.matrix()) < 1e-12);
  const auto p = harness::generate_instance({4, 3, 1, 9, harness::Structure::kPureSigma});
  CHECK(p.sigma.is_pure());
  const auto z = harness::generate_instance({4, 2, 2, 9, harness::Structure::kSingularSum});
  CHECK(numerical_rank(z.rho.matrix() + z.sigma.matrix(), ToleranceConfig{}) == 3);
  CHECK_THROWS_AS(
      harness::generate_instance({3, 2, 2, 0, harness::Structure::kPureSigma}), Error);
  CHECK_THROWS_AS(harness::parse_structure("diagonal"), Error);
  CHECK(harness::parse_structure("singular-sum") == harness::Structure::kSingularSum);
}

TEST_CASE("random POVMs and stochastic maps are valid") {
  harness::Prng rng(3);
  for (int i = 0; i < 10; ++i) {
    const Povm e = harness::random_povm(4, 5, rng);
    CHECK(near(element_sum(e), identity(4), 1e-10));
    const auto s = harness::random_stochastic(3, 5, rng);
    CHECK_NOTHROW(s.validate());
  }
}

TEST_CASE("JSON round trips") {
  harness::Prng rng(4);
  const CMatrix m = harness::random_density(3, 2, rng);
  CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
  const Povm e = harness::random_povm(3, 3, rng);
  const Povm back = io::povm_from_json(io::povm_to_json(e));
  REQUIRE(back.size() == e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(back[i].label == e[i].label);
    CHECK(back[i].op == e[i].op);
  }
  CHECK_THROWS_AS(io::matrix_from_json(io::Json::parse(R"({"dim":[2,2],"re":[[1]]})")), Error);
  const auto real_only = io::matrix_from_json(io::Json::parse(R"({"dim":[1,1],"re":[[0.5]]})"));
  CHECK(real_only(0, 0) == Complex(0.5, 0.0));
}

TEST_CASE("sampling a deterministic distribution") {
  OutcomeDistribution p{{"a", "b"}, {1.0, 0.0}};
  OutcomeDistribution q{{"a", "b"}, {0.0, 1.0}};
  const auto r = harness::sample_outcomes(p, q, 1000, 3);
  CHECK(r.bc_hat == 0.0);
  CHECK(r.tv_hat == 1.0);
  CHECK(r.bc_exact == 0.0);
  CHECK(r.tv_exact == 1.0);
}

TEST_CASE("sampling is reproducible and unbiased") {
  const auto pair = harness::generate_instance({3, 3, 2, 5, harness::Structure::kGeneric});
  const Povm m = build_canonical_pvm(pair.rho, pair.sigma);
  const auto a = harness::sample_measurement(m, pair.rho, pair.sigma, 100000, 8);
  const auto b = harness::sample_measurement(m, pair.rho, pair.sigma, 100000, 8);
  CHECK(a.bc_hat == b.bc_hat);
  CHECK(a.bc_exact == doctest::Approx(std::sqrt(fidelity(pair.rho, pair.sigma))).epsilon(1e-9));
  CHECK(std::abs(a.bc_z()) < 5.0);
  CHECK(std::abs(a.tv_z()) < 5.0);
}

TEST_CASE("qubit grid oracle") {
  const auto rho = state(proj(zero_ket()));
  const auto sigma = state(proj(plus_ket()));
  const auto r = harness::qubit_grid_oracle(rho, sigma, 720);
  CHECK(r.evaluated == 720u * 720u);
  CHECK(r.f_gap() >= -1e-12);
  CHECK(r.f_gap() < 1e-4);
  CHECK(r.d_gap() >= -1e-12);
  CHECK(r.d_gap() < 1e-4);
  CHECK(r.exact_d == doctest::Approx(M_SQRT1_2));
}

TEST_CASE("random POVM oracle respects the bounds") {
  harness::Prng rng(6);
  const auto rho = state(harness::random_density(3, 3, rng));
  const auto sigma = state(harness::random_density(3, 1, rng));
  const auto r = harness::random_povm_oracle(rho, sigma, 1000, 11);
  CHECK(r.best_f >= r.exact_f - 1e-9);
  CHECK(r.best_d <= r.exact_d + 1e-9);
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("analyze") {
  TempDir dir;
  write_state(dir.file("rho.json"), qutrit_rho());
  write_state(dir.file("sigma.json"), qutrit_sigma());
  const auto r = run({"analyze", dir.file("rho.json"), dir.file("sigma.json")});
  REQUIRE(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j["dichotomy"]["unique_minimal"] == true);
  const Povm m = io::povm_from_json(j["dichotomy"]["M_rho_sigma"]);
  CHECK(equivalent(m, Povm::from_operators({basis_proj(3, 0), basis_proj(3, 1), basis_proj(3, 2)})));

  write_state(dir.file("zero.json"), proj(zero_ket()));
  write_state(dir.file("plus.json"), proj(plus_ket()));
  const auto q = run({"analyze", dir.file("zero.json"), dir.file("plus.json")});
  REQUIRE(q.code == 0);
  const auto jq = io::Json::parse(q.out);
  CHECK(jq["divergences"]["F"].get<double>() == doctest::Approx(0.5));
  CHECK(jq["divergences"]["D"].get<double>() == doctest::Approx(M_SQRT1_2));
  CHECK(jq["dichotomy"]["unique_minimal"] == false);

  const auto same = run({"analyze", dir.file("zero.json"), dir.file("zero.json")});
  CHECK(same.code == 2);
  CHECK(same.err.find("states must be distinct") != std::string::npos);
  CHECK(same.err.find("[states.distinct]") != std::string::npos);
}

TEST_CASE("construct and verify") {
  TempDir dir;
  write_state(dir.file("rho.json"), qutrit_rho());
  write_state(dir.file("sigma.json"), qutrit_sigma());
  write_state(dir.file("zero.json"), proj(zero_ket()));
  write_state(dir.file("plus.json"), proj(plus_ket()));

  REQUIRE(run({"construct", dir.file("rho.json"), dir.file("sigma.json"), "--method",
               "m-rho-sigma", "--out", dir.file("m.json")})
              .code == 0);
  CHECK(io::povm_from_json(io::read_json_file(dir.file("m.json"))).size() == 3);
  CHECK(run({"verify", dir.file("rho.json"), dir.file("sigma.json"), dir.file("m.json")}).code ==
        0);

  REQUIRE(run({"construct", dir.file("zero.json"), dir.file("plus.json"), "--method", "mix:0.5",
               "--out", dir.file("mix.json")})
              .code == 0);
  CHECK(io::povm_from_json(io::read_json_file(dir.file("mix.json"))).size() >= 3);
  CHECK(run({"verify", dir.file("zero.json"), dir.file("plus.json"), dir.file("mix.json")}).code ==
        0);

  REQUIRE(run({"construct", dir.file("zero.json"), dir.file("plus.json"), "--method",
               "m-sigma-rho", "--out", dir.file("msr.json")})
              .code == 0);
  CHECK(run({"verify", dir.file("zero.json"), dir.file("plus.json"), dir.file("msr.json")}).code ==
        0);

  REQUIRE(run({"construct", dir.file("rho.json"), dir.file("sigma.json"), "--method",
               "t-optimal:zero", "--out", dir.file("t.json")})
              .code == 0);
  const auto t = run({"verify", dir.file("rho.json"), dir.file("sigma.json"), dir.file("t.json"),
                      "--criterion", "trace"});
  CHECK(t.code == 0);
  CHECK(io::povm_from_json(io::read_json_file(dir.file("t.json"))).size() == 2);

  io::write_text_file(dir.file("id.json"),
                      io::dump(io::povm_to_json(Povm::from_operators({identity(3)}))));
  CHECK(run({"verify", dir.file("rho.json"), dir.file("sigma.json"), dir.file("id.json")}).code ==
        1);

  io::Json bad = io::povm_to_json(Povm::from_operators({identity(3)}));
  bad["elements"][0]["matrix"] = io::matrix_to_json(0.5 * identity(3));
  io::write_text_file(dir.file("bad.json"), io::dump(bad));
  const auto b = run({"verify", dir.file("rho.json"), dir.file("sigma.json"), dir.file("bad.json")});
  CHECK(b.code == 2);
  CHECK(b.err.find("[povm.completeness]") != std::string::npos);

  CHECK(run({"construct", dir.file("rho.json"), dir.file("sigma.json"), "--method", "bogus"})
            .code == 2);
}

TEST_CASE("random is deterministic and re-validates") {
  TempDir dir;
  const std::vector<std::string> args{"random", "--dim", "3", "--rank-rho", "2", "--rank-sigma",
                                      "2", "--structure", "commuting-supports", "--seed", "7"};
  auto a = args;
  a.insert(a.end(), {"--out", dir.file("a")});
  auto b = args;
  b.insert(b.end(), {"--out", dir.file("b")});
  REQUIRE(run(a).code == 0);
  REQUIRE(run(b).code == 0);
  CHECK(slurp(dir.file("a.rho.json")) == slurp(dir.file("b.rho.json")));
  CHECK(slurp(dir.file("a.sigma.json")) == slurp(dir.file("b.sigma.json")));
  const auto rho = io::state_from_json(io::read_json_file(dir.file("a.rho.json")));
  const auto sigma = io::state_from_json(io::read_json_file(dir.file("a.sigma.json")));
  CHECK(commutator_norm(rho.support(), sigma.support()) < 1e-12);
  CHECK(run({"random", "--dim", "3", "--rank-rho", "3", "--rank-sigma", "2", "--structure",
             "pure-sigma", "--out", dir.file("c")})
            .code == 2);
}

TEST_CASE("sample and oracle") {
  TempDir dir;
  write_state(dir.file("zero.json"), proj(zero_ket()));
  write_state(dir.file("plus.json"), proj(plus_ket()));
  REQUIRE(run({"construct", dir.file("zero.json"), dir.file("plus.json"), "--method",
               "t-optimal:zero", "--out", dir.file("t.json")})
              .code == 0);
  const auto s = run({"sample", dir.file("zero.json"), dir.file("plus.json"), dir.file("t.json"),
                      "--seed", "3"});
  REQUIRE(s.code == 0);
  CHECK(s.out.rfind("shots,seed,prng,bc_exact,bc_hat,bc_se,tv_exact,tv_hat,tv_se\n", 0) == 0);
  const auto s2 = run({"sample", dir.file("zero.json"), dir.file("plus.json"), dir.file("t.json"),
                       "--seed", "3"});
  CHECK(s.out == s2.out);
  std::istringstream lines(s.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::vector<std::string> cells;
  std::stringstream rs(row);
  for (std::string c; std::getline(rs, c, ',');) cells.push_back(c);
  REQUIRE(cells.size() == 9);
  const double tv_exact = std::stod(cells[6]);
  const double tv_hat = std::stod(cells[7]);
  const double tv_se = std::stod(cells[8]);
  CHECK(std::abs(tv_hat - tv_exact) <= 5.0 * tv_se);

  const auto o = run({"oracle", dir.file("zero.json"), dir.file("plus.json"), "--mode",
                      "qubit-grid:720"});
  REQUIRE(o.code == 0);
  const auto j = io::Json::parse(o.out);
  CHECK(std::abs(j["best_f"].get<double>() - 0.5) < 1e-4);
  CHECK(std::abs(j["best_d"].get<double>() - M_SQRT1_2) < 1e-4);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "/nonexistent/rho.json", "/nonexistent/sigma.json"}).code == 2);
  CHECK(run({"--tol-profile", "sloppy", "analyze", "a", "b"}).code == 2);
}

}  // TEST_SUITE
