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

#include "multiport/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "multiport/core.hpp"
#include "multiport/kernels.hpp"

namespace multiport {

namespace {

void check_cap(double count, std::size_t max_points) {
  if (count > static_cast<double>(max_points)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "grid has %.0f points, above the cap of %zu", count,
                  max_points);
    throw Error(ErrorKind::kInvalidConfig, buf);
  }
}

}  // namespace

std::vector<std::vector<double>> simplex_grid(int d, double step, std::size_t max_points) {
  const Dimension dim(d);
  if (!(step > 0.0) || step > 1.0) throw Error(ErrorKind::kInvalidConfig, "step must be in (0, 1]");
  const double inverse = 1.0 / step;
  const long n = std::lround(inverse);
  if (std::abs(inverse - static_cast<double>(n)) > 1e-9 * inverse) {
    throw Error(ErrorKind::kInvalidConfig, "1/step must be an integer");
  }
  // C(n + d - 1, d - 1), in floating point to survive overflow.
  double count = 1.0;
  for (int i = 1; i < d; ++i) count = count * static_cast<double>(n + i) / i;
  check_cap(count, max_points);

  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<long> parts(dim.size(), 0);
  std::function<void(std::size_t, long)> fill = [&](std::size_t k, long left) {
    if (k + 1 == dim.size()) {
      parts[k] = left;
      std::vector<double> p(dim.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = static_cast<double>(parts[i]) / static_cast<double>(n);
      }
      out.push_back(std::move(p));
      return;
    }
    for (long v = 0; v <= left; ++v) {
      parts[k] = v;
      fill(k + 1, left - v);
    }
  };
  fill(0, n);
  return out;
}

std::vector<SimplexRow> simplex_sweep(double step, const SearchConfig& config,
                                      std::size_t max_points) {
  std::vector<SimplexRow> rows;
  for (auto& p : simplex_grid(3, step, max_points)) {
    const ProbabilityDistribution target(p);
    SimplexRow row;
    row.target = std::move(p);
    const SynthesisOutcome closed = synthesize_3port(target, config.tolerance);
    const SynthesisOutcome search = synthesize_search(target, config);
    row.closed_form = closed.status;
    row.search = search.status;
    if (closed.result) row.closed_form_residual = closed.result->residual;
    if (search.result) row.search_residual = search.result->residual;
    row.agree = closed.ok() == search.ok();
    rows.push_back(std::move(row));
  }
  return rows;
}

PhaseGridSummary phase_grid_sweep(int d, int resolution, double threshold, std::size_t max_points,
                                  std::vector<PhaseGridRow>* rows) {
  const Dimension dim(d);
  if (resolution < 1) throw Error(ErrorKind::kInvalidConfig, "resolution must be >= 1");
  check_cap(std::pow(static_cast<double>(resolution), d - 1), max_points);

  Matrix f = dft_matrix(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (auto& v : f.data()) v *= scale;
  const auto& k = kernels::kernels();

  std::vector<int> index(dim.size(), 0);
  std::vector<double> theta(dim.size(), 0.0);
  std::vector<Complex> lambda(dim.size(), Complex(1.0, 0.0));
  std::vector<Complex> c(dim.size());
  std::vector<double> prob(dim.size());
  PhaseGridSummary summary;
  const double delta = 2.0 * kPi / resolution;
  while (true) {
    for (std::size_t i = 1; i < dim.size(); ++i) {
      theta[i] = delta * index[i];
      lambda[i] = std::polar(1.0, theta[i]);
    }
    k.matvec(f.data(), dim.size(), dim.size(), lambda, c);
    k.squared_magnitudes(c, prob);
    std::vector<double> mags(dim.size());
    int above = 0;
    for (std::size_t m = 0; m < dim.size(); ++m) {
      mags[m] = std::sqrt(prob[m]);
      if (mags[m] > threshold) ++above;
    }
    const bool flagged = above == 2;
    ++summary.points;
    if (flagged) ++summary.two_nonzero;
    if (rows) rows->push_back(PhaseGridRow{theta, std::move(mags), flagged});

    // Odometer over index[1..d-1], last index fastest.
    std::size_t i = dim.size() - 1;
    while (i >= 1 && ++index[i] == resolution) index[i--] = 0;
    if (i == 0) break;
  }
  return summary;
}

std::vector<SufficiencyRow> sufficiency_sweep(int d, double step, const SearchConfig& config,
                                              double gap_threshold, std::size_t max_points) {
  SearchConfig cfg = config;
  cfg.stop_at_tolerance = true;
  std::vector<SufficiencyRow> rows;
  for (auto& p : simplex_grid(d, step, max_points)) {
    const ProbabilityDistribution target(p);
    SufficiencyRow row;
    row.target = std::move(p);
    const FeasibilityReport polygon = polygon_inequalities(target);
    row.polygon = polygon.verdict;
    row.min_margin = polygon.min_polygon_margin();
    if (polygon.verdict != Verdict::kInfeasible) {
      const SynthesisOutcome search = synthesize_search(target, cfg);
      row.status = search.status;
      row.best_residual = search.result->residual;
      row.seed = search.provenance->seed;
      row.restarts_run = search.provenance->restarts_run;
      row.best_restart = search.provenance->best_restart;
      row.gap = row.best_residual > gap_threshold;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace multiport
