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
#include "fidopt/tolerance.hpp"

#include <cmath>
#include <string>

#include "fidopt/error.hpp"

namespace fidopt {

ToleranceConfig ToleranceConfig::strict() {
  return ToleranceConfig{1e-12, 1e-10, 1e-12, 1e-11};
}

ToleranceConfig ToleranceConfig::loose() {
  return ToleranceConfig{1e-8, 1e-6, 1e-8, 1e-7};
}

ToleranceConfig ToleranceConfig::from_profile(std::string_view name) {
  if (name == "strict") return strict();
  if (name == "default" || name.empty()) return ToleranceConfig{};
  if (name == "loose") return loose();
  throw Error("tolerance.profile",
              "unknown tolerance profile '" + std::string(name) +
                  "' (expected strict, default or loose)");
}

void ToleranceConfig::validate() const {
  for (double v : {rank_tol_factor, cluster_gap, psd_clip, opt_tol}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error("tolerance.positive", "all tolerances must be strictly positive");
    }
  }
}

}  // namespace fidopt
