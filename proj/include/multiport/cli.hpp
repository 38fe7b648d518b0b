// Copyright 2026 The multiport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include "multiport/types.hpp"

namespace multiport::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kInfeasible = 3,
  kNotFound = 4,
};

/// Default tolerance override, read by `run` when --tolerance is absent.
inline constexpr const char* kToleranceEnv = "MULTIPORT_TOLERANCE";

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated reals; each item may be a decimal, a fraction such as
/// 1/9, or a multiple of pi such as -pi/6 or 2*pi/3.
std::vector<double> parse_reals(const std::string& text);

/// Comma-separated complex literals: 1, -0.5i, 0.3+0.4i, 1e-3-2i.
std::vector<Complex> parse_complexes(const std::string& text);

std::vector<int> parse_ints(const std::string& text);

}  // namespace multiport::cli
