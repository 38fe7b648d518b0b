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

#include "multiport/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace multiport {

namespace {

// Relative slack on polygon margins: a side may exceed the sum of the others
// by at most this fraction of the perimeter. Probabilities give perimeters
// <= 1, so this never exceeds an absolute 1e-12 there.
constexpr double kPolygonSlack = 1e-12;

std::string format_note(const char* fmt, double a, double b, int m, int p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, m, p, a, b);
  return buf;
}

// side(m, p) gives the length of the directed segment for c_m conj(c_{m-p}).
template <typename SideFn>
FeasibilityReport polygon_check(std::size_t d, SideFn side, const char* label) {
  FeasibilityReport report;
  report.verdict = Verdict::kNecessaryPassed;
  std::vector<double> sides(d);
  for (std::size_t p = 1; p < d; ++p) {
    double perimeter = 0.0;
    for (std::size_t m = 0; m < d; ++m) {
      sides[m] = side(static_cast<long>(m), static_cast<long>(p));
      perimeter += sides[m];
    }
    for (std::size_t m = 0; m < d; ++m) {
      const double others = perimeter - sides[m];
      const double margin = others - sides[m];
      report.polygon_margins.push_back({static_cast<int>(m), static_cast<int>(p), margin});
      if (margin < -kPolygonSlack * perimeter) {
        report.verdict = Verdict::kInfeasible;
        report.notes.push_back(format_note(label, sides[m], others, static_cast<int>(m),
                                           static_cast<int>(p)));
      }
    }
  }
  return report;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kFeasible: return "feasible";
    case Verdict::kInfeasible: return "infeasible";
    case Verdict::kNecessaryPassed: return "necessary-passed";
  }
  return "unknown";
}

const char* to_string(TwoModeVerdict v) {
  return v == TwoModeVerdict::kPossible ? "possible" : "impossible";
}

double FeasibilityReport::max_exact_residual() const {
  double worst = 0.0;
  for (const auto& r : exact_residuals) worst = std::max(worst, std::abs(r));
  return worst;
}

double FeasibilityReport::min_polygon_margin() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pm : polygon_margins) best = std::min(best, pm.margin);
  return best;
}

ConcurrenceMatrix::ConcurrenceMatrix(std::size_t d, std::vector<double> values)
    : d_(d), values_(std::move(values)) {
  if (d_ < 2) throw Error(ErrorKind::kDimensionTooSmall, "concurrence matrix needs d >= 2");
  if (values_.size() != d_ * d_) {
    throw Error(ErrorKind::kDimensionMismatch, "concurrence matrix must be d x d");
  }
  for (std::size_t m = 0; m < d_; ++m) {
    if (values_[m * d_ + m] != 0.0) {
      throw Error(ErrorKind::kInconsistentInput, "concurrence matrix diagonal must be zero");
    }
    for (std::size_t n = 0; n < d_; ++n) {
      const double v = values_[m * d_ + n];
      if (!std::isfinite(v) || v < 0.0) {
        throw Error(ErrorKind::kInconsistentInput, "concurrences must be finite and >= 0");
      }
      if (std::abs(v - values_[n * d_ + m]) > 1e-12 * std::max(1.0, v)) {
        throw Error(ErrorKind::kInconsistentInput, "concurrence matrix must be symmetric");
      }
    }
  }
}

ConcurrenceMatrix ConcurrenceMatrix::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorKind::kInconsistentInput, "scale factor must be positive");
  std::vector<double> v = values_;
  for (auto& x : v) x *= factor;
  return ConcurrenceMatrix(d_, std::move(v));
}

std::vector<Complex> exact_condition_residuals(const AmplitudeVector& c) {
  const long d = static_cast<long>(c.size());
  std::vector<Complex> r(static_cast<std::size_t>(d - 1));
  for (long p = 1; p < d; ++p) {
    Complex sum = 0.0;
    for (long m = 0; m < d; ++m) sum += c.at_cyclic(m) * std::conj(c.at_cyclic(m - p));
    r[static_cast<std::size_t>(p - 1)] = sum;
  }
  return r;
}

std::vector<Complex> exact_condition_k_form(const AmplitudeVector& c) {
  const std::size_t d = c.size();
  std::vector<Complex> s(d);
  for (std::size_t k = 0; k < d; ++k) {
    Complex sum = 0.0;
    for (std::size_t m = 0; m < d; ++m) {
      for (std::size_t n = 0; n < d; ++n) {
        if (m == n) continue;
        const long shift = static_cast<long>(k) * (static_cast<long>(n) - static_cast<long>(m));
        const double angle = 2.0 * kPi * static_cast<double>(wrap_index(shift, d)) /
                             static_cast<double>(d);
        sum += c[m] * std::conj(c[n]) * std::polar(1.0, angle);
      }
    }
    s[k] = sum;
  }
  return s;
}

FeasibilityReport exact_feasibility(const AmplitudeVector& c, double tolerance) {
  std::vector<double> probs = c.probabilities();
  // Renormalize away rounding so the distribution constructor accepts it.
  double total = 0.0;
  for (double v : probs) total += v;
  for (double& v : probs) v /= total;
  FeasibilityReport report = polygon_inequalities(ProbabilityDistribution(std::move(probs)));
  report.exact_residuals = exact_condition_residuals(c);
  report.notes.clear();
  const double worst = report.max_exact_residual();
  if (worst <= tolerance) {
    report.verdict = Verdict::kFeasible;
  } else {
    report.verdict = Verdict::kInfeasible;
    for (std::size_t i = 0; i < report.exact_residuals.size(); ++i) {
      const double mag = std::abs(report.exact_residuals[i]);
      if (mag > tolerance) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "autocorrelation at shift p=%zu has magnitude %.6g > %.3g",
                      i + 1, mag, tolerance);
        report.notes.emplace_back(buf);
      }
    }
  }
  return report;
}

FeasibilityReport polygon_inequalities(const ProbabilityDistribution& p) {
  const std::vector<double> x = p.magnitudes();
  const std::size_t d = x.size();
  return polygon_check(
      d,
      [&](long m, long shift) { return x[wrap_index(m, d)] * x[wrap_index(m - shift, d)]; },
      "polygon inequality violated at m=%d, p=%d: |c_m||c_m-p| = %.6g exceeds sum of others %.6g");
}

ConcurrenceMatrix concurrence_matrix(const AmplitudeVector& c) {
  const std::vector<double> x = c.magnitudes();
  const std::size_t d = x.size();
  std::vector<double> v(d * d, 0.0);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n)
      if (m != n) v[m * d + n] = 2.0 * x[m] * x[n];
  return ConcurrenceMatrix(d, std::move(v));
}

ConcurrenceMatrix concurrence_matrix(const ProbabilityDistribution& p) {
  const std::vector<double> x = p.magnitudes();
  const std::size_t d = x.size();
  std::vector<double> v(d * d, 0.0);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n)
      if (m != n) v[m * d + n] = 2.0 * x[m] * x[n];
  return ConcurrenceMatrix(d, std::move(v));
}

FeasibilityReport concurrence_inequalities(const ConcurrenceMatrix& c) {
  return polygon_check(
      c.size(), [&](long m, long shift) { return c(m, m - shift); },
      "concurrence inequality violated at m=%d, p=%d: C_m,m-p = %.6g exceeds sum of others %.6g");
}

TwoModeVerdict two_mode_only_verdict(Dimension d, int a, int b) {
  if (a < 0 || b <= a || b >= d.value()) {
    throw Error(ErrorKind::kIndexOutOfRange, "two-mode query needs 0 <= a < b < d");
  }
  const bool even = d.value() % 2 == 0;
  return even && (b - a) == d.value() / 2 ? TwoModeVerdict::kPossible : TwoModeVerdict::kImpossible;
}

}  // namespace multiport
