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

// Which single-photon output states can the F P F interferometer produce?
//
// Exact test: a state c is producible from port 0 iff the cyclic
// autocorrelations r_p = sum_m c_m conj(c_{m-p}) vanish for p = 1..d-1.
//
// Necessary test on magnitudes only: for every shift p the side lengths
// |c_m||c_{m-p}| must be able to close a polygon, i.e. no side exceeds the sum
// of the others. For d = 3 this is also sufficient; for larger d it is not
// known to be.

#include <string>
#include <vector>

#include "multiport/types.hpp"

namespace multiport {

enum class Verdict {
  kFeasible,
  kInfeasible,
  /// Necessary conditions hold; existence is not established.
  kNecessaryPassed,
};

const char* to_string(Verdict v);

struct PolygonMargin {
  int m = 0;
  int p = 0;
  /// (sum of the other sides) - (side m). Negative means violated.
  double margin = 0.0;
};

struct FeasibilityReport {
  Verdict verdict = Verdict::kInfeasible;
  /// r_p for p = 1..d-1 when the exact test ran; empty otherwise.
  std::vector<Complex> exact_residuals;
  std::vector<PolygonMargin> polygon_margins;
  std::vector<std::string> notes;

  double max_exact_residual() const;
  double min_polygon_margin() const;
};

/// Pairwise single-photon concurrences C_mn = 2 |c_m| |c_n|, zero diagonal.
class ConcurrenceMatrix {
 public:
  /// Validates symmetry, zero diagonal and non-negativity.
  ConcurrenceMatrix(std::size_t d, std::vector<double> values);

  std::size_t size() const noexcept { return d_; }
  /// Cyclic indices: C_{m+d, n+d} = C_{m, n}.
  double operator()(long m, long n) const { return values_[wrap_index(m, d_) * d_ + wrap_index(n, d_)]; }
  const std::vector<double>& values() const noexcept { return values_; }

  ConcurrenceMatrix scaled(double factor) const;

 private:
  std::size_t d_;
  std::vector<double> values_;
};

/// r_p = sum_m c_m conj(c_{(m-p) mod d}) for p = 1..d-1.
std::vector<Complex> exact_condition_residuals(const AmplitudeVector& c);

/// S_k = sum_{m != n} c_m conj(c_n) exp(2 pi i k (n - m) / d) for k = 0..d-1.
/// Mathematically real; returned complex so callers can see roundoff.
std::vector<Complex> exact_condition_k_form(const AmplitudeVector& c);

/// Exact producibility of the full state (phases included).
FeasibilityReport exact_feasibility(const AmplitudeVector& c, double tolerance = kDefaultTolerance);

/// Polygon inequalities over all m = 0..d-1, p = 1..d-1 on |c_m| = sqrt(p_m).
/// Verdict is kNecessaryPassed or kInfeasible.
FeasibilityReport polygon_inequalities(const ProbabilityDistribution& p);

ConcurrenceMatrix concurrence_matrix(const AmplitudeVector& c);
ConcurrenceMatrix concurrence_matrix(const ProbabilityDistribution& p);

/// Same inequalities as polygon_inequalities, stated on concurrences. The
/// test is homogeneous, so the verdict is unchanged by a positive rescaling.
FeasibilityReport concurrence_inequalities(const ConcurrenceMatrix& c);

enum class TwoModeVerdict { kPossible, kImpossible };

const char* to_string(TwoModeVerdict v);

/// Can an output state entangle only modes a and b? Possible iff d is even and
/// b - a = d/2. Requires 0 <= a < b < d.
TwoModeVerdict two_mode_only_verdict(Dimension d, int a, int b);

}  // namespace multiport
