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
#include "fidopt/harness/io.hpp"

#include <fstream>
#include <sstream>

#include "fidopt/error.hpp"

namespace fidopt::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error("json.schema", what); }

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return Json{{"dim", {m.rows(), m.cols()}}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
    schema_error("matrix needs \"dim\" and \"re\"");
  }
  const Json& dim = j.at("dim");
  if (!dim.is_array() || dim.size() != 2 || !dim[0].is_number_integer() ||
      !dim[1].is_number_integer()) {
    schema_error("\"dim\" must be [rows, cols]");
  }
  const auto rows = dim[0].get<Index>();
  const auto cols = dim[1].get<Index>();
  if (rows <= 0 || cols <= 0) schema_error("matrix dimensions must be positive");
  auto read_part = [&](const char* key) {
    Eigen::MatrixXd part = Eigen::MatrixXd::Zero(rows, cols);
    if (!j.contains(key)) return part;
    const Json& a = j.at(key);
    if (!a.is_array() || static_cast<Index>(a.size()) != rows) {
      schema_error(std::string("\"") + key + "\" must have one row per matrix row");
    }
    for (Index r = 0; r < rows; ++r) {
      const Json& row = a[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
        schema_error(std::string("\"") + key + "\" row has the wrong length");
      }
      for (Index c = 0; c < cols; ++c) {
        const Json& x = row[static_cast<std::size_t>(c)];
        if (!x.is_number()) schema_error("matrix entries must be numbers");
        part(r, c) = x.get<double>();
      }
    }
    return part;
  };
  CMatrix m(rows, cols);
  m.real() = read_part("re");
  m.imag() = read_part("im");
  return m;
}

Json vector_to_json(const CVector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Json povm_to_json(const Povm& e) {
  Json els = Json::array();
  for (const auto& el : e) els.push_back(Json{{"label", el.label}, {"matrix", matrix_to_json(el.op)}});
  return Json{{"elements", std::move(els)}};
}

Povm povm_from_json(const Json& j, const ToleranceConfig& tol) {
  if (!j.is_object() || !j.contains("elements") || !j.at("elements").is_array()) {
    schema_error("POVM needs an \"elements\" array");
  }
  std::vector<PovmElement> els;
  std::size_t i = 0;
  for (const auto& el : j.at("elements")) {
    if (!el.is_object() || !el.contains("matrix")) schema_error("POVM element needs \"matrix\"");
    std::string label = "E" + std::to_string(i++);
    if (el.contains("label")) {
      if (!el.at("label").is_string()) schema_error("POVM label must be a string");
      label = el.at("label").get<std::string>();
    }
    els.push_back({std::move(label), matrix_from_json(el.at("matrix"))});
  }
  return Povm::from_elements(std::move(els), tol);
}

DensityOperator state_from_json(const Json& j, const ToleranceConfig& tol) {
  return DensityOperator::from_matrix(matrix_from_json(j), tol);
}

Json eigensystem_to_json(const PencilEigensystem& e) {
  Json out = Json::array();
  auto basis_json = [](const CMatrix& b) {
    Json cols = Json::array();
    for (Index c = 0; c < b.cols(); ++c) cols.push_back(vector_to_json(b.col(c)));
    return cols;
  };
  for (const auto& p : e.finite) {
    out.push_back(Json{{"lambda", p.lambda}, {"basis", basis_json(p.basis)}});
  }
  if (e.infinite_basis.cols() > 0) {
    out.push_back(Json{{"lambda", "inf"}, {"basis", basis_json(e.infinite_basis)}});
  }
  return out;
}

Json verdict_to_json(const OptimalityVerdict& v) {
  Json els = Json::array();
  for (const auto& el : v.elements) {
    Json eig = nullptr;
    if (el.parallel) eig = el.kappa ? Json(*el.kappa) : Json("inf");
    els.push_back(Json{{"label", el.label},
                       {"kappa", optional_number(el.kappa)},
                       {"residual", el.residual},
                       {"eigenspace", eig}});
  }
  Json out{{"criterion", "fidelity"},
           {"f_optimal", v.is_f_optimal},
           {"simple", v.is_simple},
           {"minimal", v.is_minimal},
           {"F", v.f},
           {"F_E", v.f_e},
           {"gap", v.gap},
           {"elements", std::move(els)}};
  if (!v.diagnostic.empty()) out["diagnostic"] = v.diagnostic;
  return out;
}

Json verdict_to_json(const TraceVerdict& v) {
  Json out{{"criterion", "trace"},
           {"t_optimal", v.is_t_optimal},
           {"minimal", v.is_minimal},
           {"D", v.d},
           {"D_E", v.d_e},
           {"gap", v.gap},
           {"elements", v.elements}};
  if (!v.diagnostic.empty()) out["diagnostic"] = v.diagnostic;
  return out;
}

Json divergence_to_json(const DivergenceReport& r) {
  Json induced = Json::array();
  for (const auto& x : r.induced) induced.push_back(Json{{"name", x.name}, {"F_E", x.f}, {"D_E", x.d}});
  return Json{{"F", r.f},
              {"D", r.d},
              {"fvdg_lower", r.fvdg_lower},
              {"fvdg_upper", r.fvdg_upper},
              {"induced", std::move(induced)}};
}

Json dichotomy_to_json(const DichotomyReport& r) {
  const char* compat = r.compatibility == Compatibility::kCompatible     ? "compatible"
                       : r.compatibility == Compatibility::kIncompatible ? "incompatible"
                                                                         : "undecided";
  return Json{{"weak_commutativity", r.weak_commutativity},
              {"commuting", r.commuting_flag},
              {"compatibility", compat},
              {"equivalent", r.equivalent_flag},
              {"unique_minimal", r.unique_minimal},
              {"M_rho_sigma", povm_to_json(r.m_rho_sigma)},
              {"M_sigma_rho", povm_to_json(r.m_sigma_rho)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io.read", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("json.parse", "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io.write", "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("io.write", "failed writing '" + path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fidopt::io
