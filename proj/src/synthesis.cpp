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

#include "multiport/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace multiport {

namespace {

constexpr double kTriangleSlack = 1e-12;
constexpr double kClampWindow = 1e-12;

double clamped_acos(double cosine, const char* which) {
  if (cosine > 1.0 + kClampWindow || cosine < -1.0 - kClampWindow || !std::isfinite(cosine)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "cosine of angle %s is %.17g, outside [-1, 1]", which, cosine);
    throw Error(ErrorKind::kInconsistentInput, buf);
  }
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

std::array<double, 3> as_array3(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

SynthesisOutcome single_mode(const ProbabilityDistribution& target, std::size_t mode,
                             double tolerance) {
  std::vector<Complex> c(target.size(), Complex(0.0, 0.0));
  c[mode] = 1.0;
  PhaseRecovery rec = phases_for_state(AmplitudeVector(std::move(c)), tolerance);
  SynthesisOutcome out;
  // e_k always maps to the unit-modulus vector exp(-2 pi i n k / d).
  AmplitudeVector achieved = output_amplitudes(*rec.phases, 0);
  const double residual = magnitude_residual(achieved, target);
  out.result = SynthesisResult{*rec.phases, std::move(achieved), residual,
                               SynthesisMethod::kPhaseRecovery};
  out.status = residual <= tolerance ? SynthesisStatus::kSuccess : SynthesisStatus::kNotFound;
  out.notes.push_back("single output mode " + std::to_string(mode) + ": deterministic output");
  return out;
}

}  // namespace

const char* to_string(SynthesisMethod m) {
  switch (m) {
    case SynthesisMethod::kClosedFormD3: return "closed-form-d3";
    case SynthesisMethod::kPhaseRecovery: return "phase-recovery";
    case SynthesisMethod::kSearch: return "search";
  }
  return "unknown";
}

const char* to_string(SynthesisStatus s) {
  switch (s) {
    case SynthesisStatus::kSuccess: return "success";
    case SynthesisStatus::kInfeasible: return "infeasible";
    case SynthesisStatus::kNotFound: return "not-found";
  }
  return "unknown";
}

double magnitude_residual(const AmplitudeVector& c, const ProbabilityDistribution& target) {
  if (c.size() != target.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "state and target sizes differ");
  }
  double worst = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    worst = std::max(worst, std::abs(std::abs(c[m]) - std::sqrt(target[m])));
  }
  return worst;
}

std::array<TriangleCheck, 3> triangle_inequalities(const std::array<double, 3>& x) {
  const double s02 = x[0] * x[2];
  const double s01 = x[0] * x[1];
  const double s12 = x[1] * x[2];
  const double perimeter = s02 + s01 + s12;
  auto make = [&](const char* label, double side, double others) {
    return TriangleCheck{label, side, others, side - others <= kTriangleSlack * perimeter};
  };
  return {make("|c0||c2| <= |c0||c1| + |c1||c2|", s02, s01 + s12),
          make("|c1||c0| <= |c0||c2| + |c1||c2|", s01, s02 + s12),
          make("|c1||c2| <= |c0||c2| + |c0||c1|", s12, s02 + s01)};
}

bool triangle_inequalities_hold(const std::array<double, 3>& x) {
  const auto checks = triangle_inequalities(x);
  return std::all_of(checks.begin(), checks.end(), [](const TriangleCheck& t) { return t.holds; });
}

TriangleAngles triangle_angles(const std::array<double, 3>& x) {
  const double norm2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw Error(ErrorKind::kNotNormalized, "triangle magnitudes must satisfy sum |c_k|^2 = 1");
  }
  for (double v : x) {
    if (!(v > kZeroMagnitude)) {
      throw Error(ErrorKind::kDegenerateMagnitudes,
                  "triangle angles need three strictly positive magnitudes");
    }
  }
  for (const auto& check : triangle_inequalities(x)) {
    if (!check.holds) throw Error(ErrorKind::kTriangleViolation, "violated: " + check.label);
  }
  // Side lengths of the closed triangle.
  const double s1 = x[0] * x[2];
  const double s2 = x[0] * x[1];
  const double s3 = x[1] * x[2];
  TriangleAngles t;
  t.a = clamped_acos((s1 * s1 + s3 * s3 - s2 * s2) / (2.0 * s1 * s3), "a");
  t.b = clamped_acos((s1 * s1 + s2 * s2 - s3 * s3) / (2.0 * s1 * s2), "b");
  t.c = clamped_acos((s2 * s2 + s3 * s3 - s1 * s1) / (2.0 * s2 * s3), "c");
  return t;
}

SynthesisOutcome synthesize_3port(const ProbabilityDistribution& target, double tolerance) {
  if (target.size() != 3) {
    throw Error(ErrorKind::kDimensionMismatch, "closed-form synthesis needs exactly 3 outputs");
  }
  const std::array<double, 3> x = as_array3(target.magnitudes());
  std::vector<std::size_t> nonzero;
  for (std::size_t k = 0; k < 3; ++k)
    if (x[k] > kZeroMagnitude) nonzero.push_back(k);

  if (nonzero.size() == 1) return single_mode(target, nonzero[0], tolerance);

  SynthesisOutcome out;
  if (nonzero.size() == 2) {
    out.status = SynthesisStatus::kInfeasible;
    out.notes.push_back(
        "exactly one zero magnitude: the closure condition then forces a second zero");
  }
  for (const auto& check : triangle_inequalities(x)) {
    if (!check.holds) {
      out.status = SynthesisStatus::kInfeasible;
      char buf[192];
      std::snprintf(buf, sizeof buf, "triangle inequality violated: %s (%.6g > %.6g)",
                    check.label.c_str(), check.side, check.others);
      out.notes.emplace_back(buf);
    }
  }
  if (!out.notes.empty()) return out;

  const TriangleAngles angles = triangle_angles(x);
  // Global phase fixed by phi_0 = 0.
  const double phi1 = (2.0 * angles.b + angles.a + kPi) / 3.0;
  const double phi2 = (angles.b - angles.a + 2.0 * kPi) / 3.0;
  const AmplitudeVector state = AmplitudeVector::normalized(
      {Complex(x[0], 0.0), std::polar(x[1], phi1), std::polar(x[2], phi2)});

  const PhaseRecovery rec = phases_for_state(state, tolerance);
  if (!rec.feasible) {
    out.status = SynthesisStatus::kNotFound;
    char buf[128];
    std::snprintf(buf, sizeof buf, "constructed phases miss unit modulus by %.3g",
                  rec.max_deviation);
    out.notes.emplace_back(buf);
    return out;
  }
  AmplitudeVector achieved = output_amplitudes(*rec.phases, 0);
  const double residual = magnitude_residual(achieved, target);
  out.result = SynthesisResult{*rec.phases, std::move(achieved), residual,
                               SynthesisMethod::kClosedFormD3};
  out.status = residual <= tolerance ? SynthesisStatus::kSuccess : SynthesisStatus::kNotFound;
  return out;
}

SynthesisOutcome synthesize_2port(const ProbabilityDistribution& target, double tolerance) {
  if (target.size() != 2) {
    throw Error(ErrorKind::kDimensionMismatch, "two-port synthesis needs exactly 2 outputs");
  }
  const std::vector<double> x = target.magnitudes();
  // Opposite quadrature makes sqrt(2) F^dagger c unit-modulus for every split.
  const AmplitudeVector state =
      AmplitudeVector::normalized({Complex(x[0], 0.0), Complex(0.0, x[1])});
  const PhaseRecovery rec = phases_for_state(state, tolerance);
  SynthesisOutcome out;
  if (!rec.feasible) {
    out.status = SynthesisStatus::kNotFound;
    out.notes.push_back("two-port recovery missed unit modulus");
    return out;
  }
  AmplitudeVector achieved = output_amplitudes(*rec.phases, 0);
  const double residual = magnitude_residual(achieved, target);
  out.result = SynthesisResult{*rec.phases, std::move(achieved), residual,
                               SynthesisMethod::kPhaseRecovery};
  out.status = residual <= tolerance ? SynthesisStatus::kSuccess : SynthesisStatus::kNotFound;
  return out;
}

SynthesisOutcome synthesize(const ProbabilityDistribution& target, const SearchConfig& config) {
  switch (target.size()) {
    case 2: return synthesize_2port(target, config.tolerance);
    case 3: return synthesize_3port(target, config.tolerance);
    default: return synthesize_search(target, config);
  }
}

}  // namespace multiport
