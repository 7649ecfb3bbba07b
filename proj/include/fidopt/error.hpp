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

#include <stdexcept>
#include <string>

namespace fidopt {

/// Raised when an input or intermediate object violates a named invariant.
/// `invariant()` is a short stable identifier (e.g. "povm.completeness") that
/// the CLI prints on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string invariant, const std::string& message)
      : std::runtime_error(message), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace fidopt
