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
#include "fidopt/harness/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "fidopt/divergences.hpp"
#include "fidopt/error.hpp"
#include "fidopt/fidelity_optimal.hpp"
#include "fidopt/harness/io.hpp"
#include "fidopt/harness/oracle.hpp"
#include "fidopt/harness/random.hpp"
#include "fidopt/harness/sampling.hpp"
#include "fidopt/pure_state.hpp"
#include "fidopt/trace_optimal.hpp"

namespace fidopt::harness {

namespace {

using io::Json;

struct Options {
  std::string profile = "default";
  std::string out;
  std::string rho;
  std::string sigma;
  std::string povm;
  std::string method;
  std::string criterion = "fidelity";
  std::string mode;
  std::string structure = "generic";
  std::uint64_t seed = 0;
  std::size_t shots = 100000;
  Index dim = 2;
  Index rank_rho = 2;
  Index rank_sigma = 2;
  std::vector<double> lambdas{0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0};
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    io::write_text_file(o.out, text);
  }
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return s.str();
}

double parse_number(const std::string& text, const std::string& invariant) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw Error(invariant, "'" + text + "' is not a number");
  }
  return v;
}

int cmd_analyze(const Options& o, const ToleranceConfig& tol, std::ostream& out) {
  const auto rho = io::state_from_json(io::read_json_file(o.rho), tol);
  const auto sigma = io::state_from_json(io::read_json_file(o.sigma), tol);
  if (rho.dim() != sigma.dim()) throw Error("states.dimension", "states have different dimensions");
  if ((rho.matrix() - sigma.matrix()).norm() <= tol.opt_tol) {
    throw Error("states.distinct", "states must be distinct");
  }
  DivergenceReport div = divergence_report(rho, sigma);
  Json report{{"divergences", nullptr}, {"joint_support_dim", rho.dim()}, {"dichotomy", nullptr}};
  const bool singular = numerical_rank(rho.matrix() + sigma.matrix(), tol) < rho.dim();
  if (singular) {
    const auto r = restrict_states(rho, sigma, tol);
    report["joint_support_dim"] = r.basis.cols();
    report["restricted"] = true;
    report["dichotomy"] = io::dichotomy_to_json(classify_dichotomy(r.rho, r.sigma, tol));
  } else {
    const auto d = classify_dichotomy(rho, sigma, tol);
    div.induced.push_back({"M_rho_sigma", induced_fidelity(d.m_rho_sigma, rho, sigma),
                           induced_trace_distance(d.m_rho_sigma, rho, sigma)});
    div.induced.push_back({"M_sigma_rho", induced_fidelity(d.m_sigma_rho, rho, sigma),
                           induced_trace_distance(d.m_sigma_rho, rho, sigma)});
    report["dichotomy"] = io::dichotomy_to_json(d);
  }
  report["divergences"] = io::divergence_to_json(div);
  emit(o, io::dump(report), out);
  return 0;
}

CMatrix parse_q0(const std::string& spec, const JordanSplit& j) {
  if (spec == "zero") return CMatrix::Zero(j.pi_zero.rows(), j.pi_zero.cols());
  if (spec == "full") return j.pi_zero;
  return parse_number(spec, "construct.method") * j.pi_zero;
}

int cmd_construct(const Options& o, const ToleranceConfig& tol, std::ostream& out,
                  std::ostream& err) {
  const auto rho = io::state_from_json(io::read_json_file(o.rho), tol);
  const auto sigma = io::state_from_json(io::read_json_file(o.sigma), tol);
  const std::string& m = o.method;
  Json result;
  if (m == "m-rho-sigma") {
    result = io::povm_to_json(build_canonical_pvm(rho, sigma, tol));
  } else if (m == "m-sigma-rho") {
    result = io::povm_to_json(build_canonical_pvm(sigma, rho, tol));
  } else if (m.rfind("mix:", 0) == 0) {
    const double p = parse_number(m.substr(4), "construct.method");
    const Povm a = build_canonical_pvm(rho, sigma, tol);
    const Povm b = build_canonical_pvm(sigma, rho, tol);
    result = io::povm_to_json(mixing_family(a, b, p, rho, sigma, tol));
    if (equivalent(a, b, tol)) {
      const std::string note =
          "support projectors commute; the mixture collapses to the unique minimal PVM";
      result["note"] = note;
      err << "note: " << note << "\n";
    }
  } else if (m.rfind("t-optimal:", 0) == 0) {
    const JordanSplit j = jordan_split(rho, sigma, tol);
    result = io::povm_to_json(minimal_t_optimal(rho, sigma, parse_q0(m.substr(10), j), tol));
  } else {
    throw Error("construct.method", "unknown method '" + m +
                                        "' (m-rho-sigma, m-sigma-rho, mix:<p>, t-optimal:<q0>)");
  }
  emit(o, io::dump(result), out);
  return 0;
}

int cmd_verify(const Options& o, const ToleranceConfig& tol, std::ostream& out) {
  const auto rho = io::state_from_json(io::read_json_file(o.rho), tol);
  const auto sigma = io::state_from_json(io::read_json_file(o.sigma), tol);
  const Povm e = io::povm_from_json(io::read_json_file(o.povm), tol);
  if (e.dim() != rho.dim() || rho.dim() != sigma.dim()) {
    throw Error("povm.dimension", "POVM and states have different dimensions");
  }
  bool optimal = false;
  if (o.criterion == "fidelity") {
    const auto v = verify_f_optimal(e, rho, sigma, tol);
    optimal = v.is_f_optimal;
    emit(o, io::dump(io::verdict_to_json(v)), out);
  } else if (o.criterion == "trace") {
    const auto v = verify_t_optimal(e, rho, sigma, tol);
    optimal = v.is_t_optimal;
    emit(o, io::dump(io::verdict_to_json(v)), out);
  } else {
    throw Error("verify.criterion", "criterion must be 'fidelity' or 'trace'");
  }
  return optimal ? 0 : 1;
}

int cmd_random(const Options& o, const ToleranceConfig& tol, std::ostream& out) {
  InstanceSpec spec{o.dim, o.rank_rho, o.rank_sigma, o.seed, parse_structure(o.structure)};
  const StatePair pair = generate_instance(spec, tol);
  const Json meta{{"prng", std::string(Prng::kAlgorithm)},
                  {"seed", spec.seed},
                  {"dim", spec.dim},
                  {"rank_rho", spec.rank_rho},
                  {"rank_sigma", spec.rank_sigma},
                  {"structure", structure_name(spec.structure)}};
  auto file = [&](const DensityOperator& s, const char* role) {
    Json j = io::matrix_to_json(s.matrix());
    Json m = meta;
    m["role"] = role;
    j["meta"] = std::move(m);
    return io::dump(j);
  };
  if (o.out.empty()) {
    out << file(pair.rho, "rho") << file(pair.sigma, "sigma");
  } else {
    io::write_text_file(o.out + ".rho.json", file(pair.rho, "rho"));
    io::write_text_file(o.out + ".sigma.json", file(pair.sigma, "sigma"));
  }
  return 0;
}

int cmd_sample(const Options& o, const ToleranceConfig& tol, std::ostream& out) {
  const auto rho = io::state_from_json(io::read_json_file(o.rho), tol);
  const auto sigma = io::state_from_json(io::read_json_file(o.sigma), tol);
  const Povm e = io::povm_from_json(io::read_json_file(o.povm), tol);
  if (e.dim() != rho.dim() || rho.dim() != sigma.dim()) {
    throw Error("povm.dimension", "POVM and states have different dimensions");
  }
  const SampleReport r = sample_measurement(e, rho, sigma, o.shots, o.seed);
  std::ostringstream csv;
  csv << "shots,seed,prng,bc_exact,bc_hat,bc_se,tv_exact,tv_hat,tv_se\n";
  csv << r.shots << ',' << r.seed << ',' << Prng::kAlgorithm << ',' << format_double(r.bc_exact)
      << ',' << format_double(r.bc_hat) << ',' << format_double(r.bc_se) << ','
      << format_double(r.tv_exact) << ',' << format_double(r.tv_hat) << ','
      << format_double(r.tv_se) << '\n';
  emit(o, csv.str(), out);
  return 0;
}

int cmd_oracle(const Options& o, const ToleranceConfig& tol, std::ostream& out) {
  const auto rho = io::state_from_json(io::read_json_file(o.rho), tol);
  const auto sigma = io::state_from_json(io::read_json_file(o.sigma), tol);
  OracleReport r;
  const std::string& m = o.mode;
  if (m.rfind("qubit-grid:", 0) == 0) {
    r = qubit_grid_oracle(rho, sigma,
                          static_cast<std::size_t>(parse_number(m.substr(11), "oracle.mode")));
  } else if (m.rfind("random-povm:", 0) == 0) {
    r = random_povm_oracle(rho, sigma,
                           static_cast<std::size_t>(parse_number(m.substr(12), "oracle.mode")),
                           o.seed, tol);
  } else {
    throw Error("oracle.mode", "mode must be qubit-grid:<n> or random-povm:<k>");
  }
  const Json j{{"mode", m},
               {"evaluated", r.evaluated},
               {"best_f", r.best_f},
               {"exact_f", r.exact_f},
               {"f_gap", r.f_gap()},
               {"best_d", r.best_d},
               {"exact_d", r.exact_d},
               {"d_gap", r.d_gap()}};
  emit(o, io::dump(j), out);
  return 0;
}

int cmd_arc(const Options& o, const ToleranceConfig& tol, std::ostream& out) {
  const auto rho = io::state_from_json(io::read_json_file(o.rho), tol);
  const auto sigma = io::state_from_json(io::read_json_file(o.sigma), tol);
  make_arc(rho, sigma);
  const PolarUnitary pu = polar_unitary_any(rho, sigma, tol);
  std::ostringstream csv;
  csv << "lambda,x,y,z,kappa\n";
  for (double lambda : o.lambdas) {
    const CMatrix basis = pencil_null_space(rho.support() * sigma.matrix(), rho.support(),
                                            lambda, tol);
    if (basis.cols() == 0) continue;
    const CVector v = basis.col(0);
    const CMatrix proj = v * v.adjoint();
    const BlochVector p = bloch_vector(proj);
    const auto pr = parallel_check(proj, rho, sigma, pu.u, tol);
    csv << format_double(lambda) << ',' << format_double(p(0)) << ',' << format_double(p(1))
        << ',' << format_double(p(2)) << ','
        << (pr.kappa ? format_double(*pr.kappa) : std::string("inf")) << '\n';
  }
  emit(o, csv.str(), out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("FIDOPT_TOL_PROFILE"); env != nullptr && *env != '\0') {
    o.profile = env;
  }
  CLI::App app{"Fidelity- and trace-optimal measurements for pairs of quantum states", "fidopt"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--tol-profile", o.profile, "strict | default | loose")->envname("FIDOPT_TOL_PROFILE");

  auto add_states = [&](CLI::App* c) {
    c->add_option("rho", o.rho, "JSON file with rho")->required();
    c->add_option("sigma", o.sigma, "JSON file with sigma")->required();
    c->add_option("--out", o.out, "output file (default: stdout)");
    c->fallthrough();
  };
  CLI::App* analyze = app.add_subcommand("analyze", "divergences and the dichotomy report");
  add_states(analyze);
  CLI::App* construct = app.add_subcommand("construct", "build an optimal POVM");
  add_states(construct);
  construct->add_option("--method", o.method, "m-rho-sigma | m-sigma-rho | mix:<p> | t-optimal:<q0>")
      ->required();
  CLI::App* verify = app.add_subcommand("verify", "check a POVM for optimality");
  add_states(verify);
  verify->add_option("povm", o.povm, "JSON file with the POVM")->required();
  verify->add_option("--criterion", o.criterion, "fidelity | trace");
  CLI::App* random = app.add_subcommand("random", "generate a seeded random pair of states");
  random->add_option("--dim", o.dim)->check(CLI::PositiveNumber);
  random->add_option("--rank-rho", o.rank_rho)->check(CLI::PositiveNumber);
  random->add_option("--rank-sigma", o.rank_sigma)->check(CLI::PositiveNumber);
  random->add_option("--structure", o.structure,
                     "generic | commuting-supports | commuting-states | pure-sigma | singular-sum");
  random->add_option("--seed", o.seed);
  random->add_option("--out", o.out, "output prefix: writes <prefix>.rho.json and <prefix>.sigma.json");
  random->fallthrough();
  CLI::App* sample = app.add_subcommand("sample", "Monte-Carlo estimates of BC and TV distance");
  add_states(sample);
  sample->add_option("povm", o.povm, "JSON file with the POVM")->required();
  sample->add_option("--shots", o.shots)->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed);
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force bounds on F and D");
  add_states(oracle);
  oracle->add_option("--mode", o.mode, "qubit-grid:<n> | random-povm:<k>")->required();
  oracle->add_option("--seed", o.seed);
  CLI::App* arc = app.add_subcommand("arc", "pencil eigenvectors of a pure qubit pair as CSV");
  add_states(arc);
  arc->add_option("--lambda", o.lambdas, "eigenvalues to sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const ToleranceConfig tol = ToleranceConfig::from_profile(o.profile);
    if (analyze->parsed()) return cmd_analyze(o, tol, out);
    if (construct->parsed()) return cmd_construct(o, tol, out, err);
    if (verify->parsed()) return cmd_verify(o, tol, out);
    if (random->parsed()) return cmd_random(o, tol, out);
    if (sample->parsed()) return cmd_sample(o, tol, out);
    if (oracle->parsed()) return cmd_oracle(o, tol, out);
    if (arc->parsed()) return cmd_arc(o, tol, out);
  } catch (const Error& e) {
    err << "invalid input [" << e.invariant() << "]: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input [json.schema]: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fidopt::harness
