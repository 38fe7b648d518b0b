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

// Interferometer model: two symmetric multiports (DFT matrices) with phase
// shifts between them, U = F diag(lambda) F.
//
// Conventions:
//   F_mn = exp(+2 pi i m n / d) / sqrt(d), 0-based row m and column n.
//   A single photon entering port p leaves in column p of U.

#include <optional>
#include <vector>

#include "multiport/matrix.hpp"
#include "multiport/types.hpp"

namespace multiport {

Matrix dft_matrix(Dimension d);
Matrix phase_diagonal(const PhaseVector& lambda);

/// U = F diag(lambda) F, tagged MatrixRole::kInterferometer.
Matrix interferometer(const PhaseVector& lambda);

/// Output state for a photon entering `input_port`. Port 0 evaluates
/// c = F lambda / sqrt(d) directly; other ports take the matching column of U.
AmplitudeVector output_amplitudes(const PhaseVector& lambda, int input_port = 0);

/// Result of inverting the port-0 map for a requested output state.
struct PhaseRecovery {
  bool feasible = false;
  /// sqrt(d) F^dagger c, before any unit-modulus check.
  std::vector<Complex> raw;
  /// ||raw_k| - 1| per entry.
  std::vector<double> deviations;
  double max_deviation = 0.0;
  /// Present iff feasible; entries rescaled to exact unit modulus.
  std::optional<PhaseVector> phases;
};

/// lambda = sqrt(d) F^dagger c; feasible iff every |lambda_k| is within
/// `tolerance` of 1.
PhaseRecovery phases_for_state(const AmplitudeVector& c, double tolerance = kDefaultTolerance);

}  // namespace multiport
