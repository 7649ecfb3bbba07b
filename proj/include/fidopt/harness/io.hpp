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

#include <json.hpp>
#include <string>

#include "fidopt/divergences.hpp"
#include "fidopt/fidelity_optimal.hpp"
#include "fidopt/pencil.hpp"
#include "fidopt/quantum.hpp"
#include "fidopt/trace_optimal.hpp"

namespace fidopt::io {

using Json = nlohmann::ordered_json;

/// {"dim":[r,c],"re":[[...]],"im":[[...]]}, row-major. "im" may be omitted
/// on input. Throws "json.schema".
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json vector_to_json(const CVector& v);

/// {"elements":[{"label":...,"matrix":{...}}, ...]}
Json povm_to_json(const Povm& e);
Povm povm_from_json(const Json& j, const ToleranceConfig& tol = {});

DensityOperator state_from_json(const Json& j, const ToleranceConfig& tol = {});

/// [{"lambda": number | "inf", "basis": [vector, ...]}, ...]
Json eigensystem_to_json(const PencilEigensystem& e);

Json verdict_to_json(const OptimalityVerdict& v);
Json verdict_to_json(const TraceVerdict& v);
Json divergence_to_json(const DivergenceReport& r);
Json dichotomy_to_json(const DichotomyReport& r);

/// Throws "io.read" / "json.parse".
Json read_json_file(const std::string& path);
/// Throws "io.write".
void write_text_file(const std::string& path, const std::string& text);
/// Two-space indent and a trailing newline.
std::string dump(const Json& j);

}  // namespace fidopt::io
