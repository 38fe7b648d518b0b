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

// Multi-start Levenberg-Marquardt over the free phases.
//
// The objective sum_m (|c_m| - t_m)^2 is not smooth where c_m = 0, which is
// exactly where zero targets want to land. Those outputs contribute the two
// residuals Re c_m and Im c_m instead; the sum of squares is unchanged but
// the problem stays smooth and keeps quadratic convergence at exact
// solutions.

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "multiport/kernels.hpp"
#include "multiport/synthesis.hpp"

namespace multiport {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Stateless stream: value i of restart r depends only on (seed, r, i).
double uniform_angle(std::uint64_t seed, int restart, int i) {
  const std::uint64_t bits =
      splitmix64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(restart))) +
                 static_cast<std::uint64_t>(i));
  return 2.0 * kPi * static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct LocalResult {
  std::vector<double> theta;
  double cost = INFINITY;
  int iterations = 0;
};

class PhaseProblem {
 public:
  PhaseProblem(const ProbabilityDistribution& target)
      : d_(target.size()), scaled_dft_(dft_matrix(Dimension(static_cast<int>(d_)))) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(d_));
    for (auto& v : scaled_dft_.data()) v *= scale;
    targets_ = target.magnitudes();
    rows_ = 0;
    for (double t : targets_) rows_ += t > kZeroMagnitude ? 1 : 2;
  }

  std::size_t params() const { return d_ - 1; }
  std::size_t rows() const { return rows_; }

  // Residuals and (optionally) the Jacobian at theta.
  void evaluate(const std::vector<double>& theta, Eigen::VectorXd& r, Eigen::MatrixXd* jac) const {
    std::vector<Complex> lambda(d_);
    lambda[0] = 1.0;
    for (std::size_t n = 1; n < d_; ++n) lambda[n] = std::polar(1.0, theta[n - 1]);
    std::vector<Complex> c(d_);
    kernels::kernels().matvec(scaled_dft_.data(), d_, d_, lambda, c);

    r.resize(static_cast<Eigen::Index>(rows_));
    if (jac) jac->setZero(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(d_ - 1));
    Eigen::Index row = 0;
    for (std::size_t m = 0; m < d_; ++m) {
      // dc_m / dtheta_n = i F'_mn lambda_n, F' = F / sqrt(d).
      if (targets_[m] > kZeroMagnitude) {
        const double mag = std::abs(c[m]);
        r[row] = mag - targets_[m];
        if (jac && mag > 1e-300) {
          for (std::size_t n = 1; n < d_; ++n) {
            const Complex dc = Complex(0.0, 1.0) * scaled_dft_(m, n) * lambda[n];
            (*jac)(row, static_cast<Eigen::Index>(n - 1)) = std::real(std::conj(c[m]) * dc) / mag;
          }
        }
        ++row;
      } else {
        r[row] = c[m].real();
        r[row + 1] = c[m].imag();
        if (jac) {
          for (std::size_t n = 1; n < d_; ++n) {
            const Complex dc = Complex(0.0, 1.0) * scaled_dft_(m, n) * lambda[n];
            (*jac)(row, static_cast<Eigen::Index>(n - 1)) = dc.real();
            (*jac)(row + 1, static_cast<Eigen::Index>(n - 1)) = dc.imag();
          }
        }
        row += 2;
      }
    }
  }

  LocalResult solve(std::vector<double> theta, const SearchConfig& config) const {
    const auto p = static_cast<Eigen::Index>(params());
    Eigen::VectorXd r, r_trial;
    Eigen::MatrixXd jac;
    evaluate(theta, r, &jac);
    double cost = r.squaredNorm();
    double mu = 1e-3;
    LocalResult out;
    int it = 0;
    for (; it < config.max_iterations && cost > 1e-34; ++it) {
      const Eigen::MatrixXd jtj = jac.transpose() * jac;
      const Eigen::VectorXd grad = jac.transpose() * r;
      if (grad.lpNorm<Eigen::Infinity>() < 1e-30) break;
      bool accepted = false;
      while (!accepted && mu < 1e16) {
        Eigen::MatrixXd damped = jtj;
        for (Eigen::Index i = 0; i < p; ++i) damped(i, i) += mu * std::max(jtj(i, i), 1e-12);
        const Eigen::VectorXd step = damped.ldlt().solve(-grad);
        std::vector<double> trial = theta;
        for (Eigen::Index i = 0; i < p; ++i) trial[static_cast<std::size_t>(i)] += step[i];
        evaluate(trial, r_trial, nullptr);
        const double trial_cost = r_trial.squaredNorm();
        if (trial_cost < cost) {
          theta = std::move(trial);
          const double step_norm = step.norm();
          cost = trial_cost;
          mu = std::max(mu / 3.0, 1e-12);
          accepted = true;
          evaluate(theta, r, &jac);
          if (step_norm < config.convergence_threshold) it = config.max_iterations;
        } else {
          mu *= 4.0;
        }
      }
      if (!accepted) break;
    }
    out.theta = std::move(theta);
    out.cost = cost;
    out.iterations = it;
    return out;
  }

 private:
  std::size_t d_;
  Matrix scaled_dft_;
  std::vector<double> targets_;
  std::size_t rows_;
};

struct Attempt {
  std::vector<double> theta;
  double residual = INFINITY;
  int iterations = 0;
};

Attempt run_restart(const PhaseProblem& problem, const ProbabilityDistribution& target,
                    const SearchConfig& config, int restart) {
  std::vector<double> theta(problem.params());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    theta[i] = uniform_angle(config.seed, restart, static_cast<int>(i));
  }
  LocalResult local = problem.solve(std::move(theta), config);
  std::vector<double> full(target.size(), 0.0);
  std::copy(local.theta.begin(), local.theta.end(), full.begin() + 1);
  const AmplitudeVector achieved = output_amplitudes(PhaseVector::from_radians(full), 0);
  return Attempt{std::move(full), magnitude_residual(achieved, target), local.iterations};
}

}  // namespace

void SearchConfig::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorKind::kInvalidConfig, what); };
  if (restarts < 1) fail("restarts must be >= 1");
  if (max_iterations < 1) fail("max_iterations must be >= 1");
  if (!(tolerance > 0.0)) fail("tolerance must be > 0");
  if (!(not_found_threshold >= tolerance)) fail("not_found_threshold must be >= tolerance");
  if (!(convergence_threshold >= 0.0)) fail("convergence_threshold must be >= 0");
  if (threads < 1) fail("threads must be >= 1");
}

SynthesisOutcome synthesize_search(const ProbabilityDistribution& target,
                                   const SearchConfig& config) {
  config.validate();
  SynthesisOutcome out;
  const FeasibilityReport necessary = polygon_inequalities(target);
  if (necessary.verdict == Verdict::kInfeasible) {
    out.status = SynthesisStatus::kInfeasible;
    out.notes = necessary.notes;
    return out;
  }

  const PhaseProblem problem(target);
  std::vector<Attempt> attempts(static_cast<std::size_t>(config.restarts));
  int best = -1;
  int run = 0;
  for (int start = 0; start < config.restarts; start += kSearchBlock) {
    const int stop = std::min(start + kSearchBlock, config.restarts);
    if (config.threads <= 1) {
      for (int r = start; r < stop; ++r)
        attempts[static_cast<std::size_t>(r)] = run_restart(problem, target, config, r);
    } else {
      std::atomic<int> next{start};
      std::vector<std::jthread> workers;
      const int n_workers = std::min(config.threads, stop - start);
      for (int w = 0; w < n_workers; ++w) {
        workers.emplace_back([&] {
          for (int r = next++; r < stop; r = next++)
            attempts[static_cast<std::size_t>(r)] = run_restart(problem, target, config, r);
        });
      }
    }
    // Strict < keeps the lowest index among equal residuals.
    for (int r = start; r < stop; ++r) {
      if (best < 0 || attempts[static_cast<std::size_t>(r)].residual <
                          attempts[static_cast<std::size_t>(best)].residual) {
        best = r;
      }
    }
    run = stop;
    if (config.stop_at_tolerance &&
        attempts[static_cast<std::size_t>(best)].residual <= config.tolerance) {
      break;
    }
  }

  const Attempt& winner = attempts[static_cast<std::size_t>(best)];
  const PhaseVector lambda = PhaseVector::from_radians(winner.theta);
  AmplitudeVector achieved = output_amplitudes(lambda, 0);
  out.result = SynthesisResult{lambda, std::move(achieved), winner.residual,
                               SynthesisMethod::kSearch};
  out.provenance = SearchProvenance{config.seed, config.restarts, run, best, winner.iterations};
  if (winner.residual <= config.tolerance) {
    out.status = SynthesisStatus::kSuccess;
  } else if (winner.residual <= config.not_found_threshold) {
    // Close but above tolerance: report the attempt without claiming success.
    out.status = SynthesisStatus::kNotFound;
    out.notes.push_back("best residual below the not-found threshold but above tolerance");
  } else {
    out.status = SynthesisStatus::kNotFound;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "no phases found: best residual %.3e after %d restarts (not a proof of "
                  "infeasibility)",
                  winner.residual, run);
    out.notes.emplace_back(buf);
  }
  return out;
}

}  // namespace multiport
