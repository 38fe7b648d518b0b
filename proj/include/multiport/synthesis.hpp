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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multiport/core.hpp"
#include "multiport/feasibility.hpp"
#include "multiport/types.hpp"

namespace multiport {

/// Interior angles of the triangle closed by c0 c2*, c1 c0*, c2 c1*.
/// `a` lies between the |c0||c2| and |c1||c2| sides, `b` between |c0||c2|
/// and |c0||c1|, `c` between |c0||c1| and |c1||c2|.
struct TriangleAngles {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// One of the three d = 3 triangle inequalities, side <= sum of the other two.
struct TriangleCheck {
  std::string label;
  double side = 0.0;
  double others = 0.0;
  bool holds = true;
};

/// Evaluates the three inequalities on magnitudes (|c0|, |c1|, |c2|).
std::array<TriangleCheck, 3> triangle_inequalities(const std::array<double, 3>& magnitudes);
bool triangle_inequalities_hold(const std::array<double, 3>& magnitudes);

/// Cosine rule on normalized, strictly positive magnitudes. Cosines within
/// 1e-12 outside [-1, 1] are clamped; anything further out throws
/// kInconsistentInput. Zero magnitudes throw kDegenerateMagnitudes and a
/// violated inequality throws kTriangleViolation.
TriangleAngles triangle_angles(const std::array<double, 3>& magnitudes);

enum class SynthesisMethod { kClosedFormD3, kPhaseRecovery, kSearch };
enum class SynthesisStatus { kSuccess, kInfeasible, kNotFound };

const char* to_string(SynthesisMethod m);
const char* to_string(SynthesisStatus s);

struct SynthesisResult {
  PhaseVector lambda;
  AmplitudeVector achieved;
  /// max_m | |achieved_m| - sqrt(target_m) |.
  double residual = 0.0;
  SynthesisMethod method = SynthesisMethod::kClosedFormD3;
};

struct SearchProvenance {
  std::uint64_t seed = 0;
  int restarts_requested = 0;
  int restarts_run = 0;
  int best_restart = -1;
  int iterations = 0;
};

struct SynthesisOutcome {
  SynthesisStatus status = SynthesisStatus::kInfeasible;
  /// Present on success; for kNotFound holds the best attempt found.
  std::optional<SynthesisResult> result;
  std::vector<std::string> notes;
  /// Filled by the search path only.
  std::optional<SearchProvenance> provenance;

  bool ok() const noexcept { return status == SynthesisStatus::kSuccess; }
};

/// Closed-form phases for a 3-outcome target. Infeasible exactly when a
/// triangle inequality fails.
SynthesisOutcome synthesize_3port(const ProbabilityDistribution& target,
                                  double tolerance = kDefaultTolerance);

struct SearchConfig {
  int restarts = 64;
  int max_iterations = 200;
  std::uint64_t seed = 20090901;
  /// Success threshold on the magnitude residual.
  double tolerance = kDefaultTolerance;
  /// Above this best residual the search reports kNotFound.
  double not_found_threshold = 1e-6;
  /// Stops a local descent once the relative step drops below this.
  double convergence_threshold = 1e-15;
  /// Stop after the first block of restarts that reaches `tolerance`.
  bool stop_at_tolerance = true;
  /// Worker threads; results do not depend on this value.
  int threads = 1;

  /// Throws kInvalidConfig on out-of-range fields.
  void validate() const;
};

/// Restarts run in fixed blocks of this many; early stopping is decided per
/// block, so the outcome is the same for any thread count.
inline constexpr int kSearchBlock = 8;

/// Multi-start least squares over theta_1..theta_{d-1} (theta_0 = 0) of
/// sum_m (|(F lambda / sqrt(d))_m| - sqrt(target_m))^2. Targets failing the
/// polygon inequalities are rejected up front. kNotFound is not a proof of
/// infeasibility.
SynthesisOutcome synthesize_search(const ProbabilityDistribution& target,
                                   const SearchConfig& config = {});

/// d = 2: phases from the state (sqrt(p0), i sqrt(p1)) via lambda = sqrt(d) F^dagger c.
SynthesisOutcome synthesize_2port(const ProbabilityDistribution& target,
                                  double tolerance = kDefaultTolerance);

/// Closed form for d <= 3, search otherwise.
SynthesisOutcome synthesize(const ProbabilityDistribution& target, const SearchConfig& config = {});

/// max_m | |c_m| - sqrt(target_m) |.
double magnitude_residual(const AmplitudeVector& c, const ProbabilityDistribution& target);

}  // namespace multiport
