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

#include <ostream>

namespace fidopt::harness {

/// Entry point of the `fidopt` command-line tool.
///
/// Exit codes: 0 success (for `verify`: the POVM is optimal), 1 valid but
/// suboptimal POVM (`verify` only), 2 invalid input or usage. Invalid-input
/// messages on `err` start with the violated invariant in brackets.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fidopt::harness
