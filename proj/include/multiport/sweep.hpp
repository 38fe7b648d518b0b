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

// Grid experiments over target distributions and phase settings.

#include <cmath>
#include <cstdint>
#include <vector>

#include "multiport/feasibility.hpp"
#include "multiport/synthesis.hpp"
#include "multiport/types.hpp"

namespace multiport {

/// Points p with every p_m a multiple of `step` (1/step must be close to an
/// integer), in lexicographic order of the integer compositions. More than
/// `max_points` points throws kInvalidConfig.
std::vector<std::vector<double>> simplex_grid(int d, double step, std::size_t max_points);

struct SimplexRow {
  std::vector<double> target;
  SynthesisStatus closed_form = SynthesisStatus::kInfeasible;
  SynthesisStatus search = SynthesisStatus::kInfeasible;
  double closed_form_residual = INFINITY;
  double search_residual = INFINITY;
  bool agree = false;
};

/// d = 3 only: closed-form synthesis against multi-start search at every grid
/// point. Agreement means both succeed or neither does.
std::vector<SimplexRow> simplex_sweep(double step, const SearchConfig& config,
                                      std::size_t max_points);

struct PhaseGridRow {
  std::vector<double> theta;
  std::vector<double> magnitudes;
  /// Exactly two magnitudes above the threshold and the rest below it.
  bool two_nonzero = false;
};

struct PhaseGridSummary {
  std::size_t points = 0;
  std::size_t two_nonzero = 0;
};

/// theta_0 = 0 and theta_1..theta_{d-1} on a uniform grid of `resolution`
/// steps over [0, 2 pi). Rows are appended in grid order when `rows` is set.
PhaseGridSummary phase_grid_sweep(int d, int resolution, double threshold, std::size_t max_points,
                                  std::vector<PhaseGridRow>* rows);

struct SufficiencyRow {
  std::vector<double> target;
  Verdict polygon = Verdict::kInfeasible;
  double min_margin = 0.0;
  /// Search fields are filled only for polygon-passing points.
  SynthesisStatus status = SynthesisStatus::kInfeasible;
  double best_residual = INFINITY;
  std::uint64_t seed = 0;
  int restarts_run = 0;
  int best_restart = -1;
  /// Polygon-passing with best residual above the gap threshold.
  bool gap = false;
};

/// Searches every polygon-passing grid point with stop_at_tolerance so
/// feasible points stop early. Gap rows are evidence only.
std::vector<SufficiencyRow> sufficiency_sweep(int d, double step, const SearchConfig& config,
                                              double gap_threshold, std::size_t max_points);

}  // namespace multiport
