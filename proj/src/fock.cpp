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

#include "multiport/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "multiport/core.hpp"
#include "multiport/kernels.hpp"
#include "multiport/synthesis.hpp"

namespace multiport {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string fmt(const char* format, double a, double b) {
  char buf[200];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

std::array<double, 6> target_amplitudes(const ProbabilityDistribution& target) {
  if (target.size() != 6) {
    throw Error(ErrorKind::kDimensionMismatch,
                "two-photon targets need 6 probabilities (200, 020, 002, 110, 101, 011)");
  }
  std::array<double, 6> a{};
  for (std::size_t k = 0; k < 6; ++k) a[k] = std::sqrt(target[k]);
  return a;
}

// Propagates `input` through the phases and compares outcome magnitudes with
// the target amplitudes.
double round_trip(const PhaseVector& lambda, const FockState& input,
                  const std::array<double, 6>& alpha) {
  const std::array<Complex, 6> got = presentation_amplitudes(propagate(input, transfer_matrix(lambda)));
  double worst = 0.0;
  for (std::size_t k = 0; k < 6; ++k) worst = std::max(worst, std::abs(std::abs(got[k]) - alpha[k]));
  return worst;
}

std::array<double, 3> normalized3(std::array<double, 3> x) {
  const double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  for (double& v : x) v /= n;
  return x;
}

// Adds the triangle margins on |c_k| to the report; false if any fails.
bool apply_triangle(TwoPhotonReport& out, const std::array<double, 3>& x) {
  bool ok = true;
  const auto checks = triangle_inequalities(x);
  const int shift_of[3] = {1, 1, 2};
  const int mode_of[3] = {0, 1, 1};
  for (std::size_t i = 0; i < 3; ++i) {
    out.report.polygon_margins.push_back(
        {mode_of[i], shift_of[i], checks[i].others - checks[i].side});
    if (!checks[i].holds) {
      ok = false;
      out.report.notes.push_back("triangle inequality violated: " + checks[i].label +
                                 fmt(" (%.6g > %.6g)", checks[i].side, checks[i].others));
    }
  }
  return ok;
}

// Synthesizes phases for magnitudes x and checks them against the target by
// propagating `input`.
void finish_by_round_trip(TwoPhotonReport& out, const std::array<double, 3>& x,
                          const FockState& input, const std::array<double, 6>& alpha,
                          double tolerance) {
  const SynthesisOutcome synth =
      synthesize_3port(ProbabilityDistribution({x[0] * x[0], x[1] * x[1], x[2] * x[2]}), tolerance);
  if (!synth.ok()) {
    out.report.verdict = Verdict::kInfeasible;
    out.report.notes.insert(out.report.notes.end(), synth.notes.begin(), synth.notes.end());
    return;
  }
  const double residual = round_trip(synth.result->lambda, input, alpha);
  out.round_trip_residual = residual;
  if (residual <= tolerance) {
    out.report.verdict = Verdict::kFeasible;
    out.phases = synth.result->lambda;
  } else {
    out.report.verdict = Verdict::kInfeasible;
    out.report.notes.push_back(
        fmt("round trip through synthesized phases misses the target by %.6g (tolerance %.3g)",
            residual, tolerance));
  }
}

}  // namespace

FockState::FockState(std::vector<int> occupations) : occupations_(std::move(occupations)) {
  if (occupations_.empty()) throw Error(ErrorKind::kDimensionTooSmall, "Fock state needs modes");
  for (int n : occupations_) {
    if (n < 0) throw Error(ErrorKind::kInconsistentInput, "occupation numbers must be >= 0");
    total_ += n;
  }
}

std::string FockState::label() const {
  const bool digits = std::all_of(occupations_.begin(), occupations_.end(), [](int n) { return n < 10; });
  std::string s;
  for (std::size_t k = 0; k < occupations_.size(); ++k) {
    if (!digits && k > 0) s += ',';
    s += std::to_string(occupations_[k]);
  }
  return s;
}

std::size_t fock_sector_size(std::size_t modes, int photons) {
  // C(n + d - 1, d - 1) by the multiplicative formula; exact for these sizes.
  std::size_t result = 1;
  const std::size_t k = modes - 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (static_cast<std::size_t>(photons) + i) / i;
  }
  return result;
}

std::vector<FockState> fock_basis(std::size_t modes, int photons) {
  if (modes == 0) throw Error(ErrorKind::kDimensionTooSmall, "Fock basis needs modes");
  if (photons < 0) throw Error(ErrorKind::kInconsistentInput, "photon number must be >= 0");
  std::vector<FockState> out;
  out.reserve(fock_sector_size(modes, photons));
  std::vector<int> occ(modes, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t mode, int left) {
    if (mode + 1 == modes) {
      occ[mode] = left;
      out.emplace_back(occ);
      return;
    }
    for (int n = left; n >= 0; --n) {
      occ[mode] = n;
      fill(mode + 1, left - n);
    }
  };
  fill(0, photons);
  return out;
}

double FockVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> FockVector::probabilities() const {
  std::vector<double> p(amplitudes.size());
  kernels::kernels().squared_magnitudes(amplitudes, p);
  return p;
}

Complex FockVector::amplitude(const FockState& state) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == state) return amplitudes[i];
  return Complex(0.0, 0.0);
}

TransferMatrix::TransferMatrix(Matrix v) : v_(std::move(v)) {
  if (v_.rows() != v_.cols() || v_.rows() < 2) {
    throw Error(ErrorKind::kDimensionMismatch, "transfer matrix must be square with d >= 2");
  }
  if (!v_.is_unitary(1e-10)) {
    throw Error(ErrorKind::kInconsistentInput, "transfer matrix is not unitary");
  }
  v_.set_role(MatrixRole::kTransfer);
}

TransferMatrix transfer_matrix(const PhaseVector& lambda) {
  const AmplitudeVector c = output_amplitudes(lambda, 0);
  const std::size_t d = c.size();
  Matrix v(d, d, MatrixRole::kTransfer);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) v(m, n) = c[(m + n) % d];
  const Matrix u_t = interferometer(lambda).transpose();
  if (max_abs_difference(v, u_t) > 1e-12) {
    throw Error(ErrorKind::kInternal, "circulant transfer matrix disagrees with U^T");
  }
  return TransferMatrix(std::move(v));
}

FockVector propagate(const FockState& input, const TransferMatrix& v,
                     const PropagationOptions& options) {
  const std::size_t d = v.modes();
  if (input.modes() != d) {
    throw Error(ErrorKind::kDimensionMismatch, "Fock state and transfer matrix sizes differ");
  }
  const int n = input.total();
  if (n > options.max_photons) {
    throw Error(ErrorKind::kPhotonLimit, "photon number " + std::to_string(n) +
                                             " exceeds the limit of " +
                                             std::to_string(options.max_photons));
  }

  std::vector<std::size_t> rows;
  double input_norm = 1.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (int r = 0; r < input[i]; ++r) rows.push_back(i);
    input_norm *= factorial(input[i]);
  }

  FockVector out;
  out.basis = fock_basis(d, n);
  out.amplitudes.resize(out.basis.size());
  const auto& k = kernels::kernels();
  const std::size_t size = static_cast<std::size_t>(n);
  std::vector<Complex> sub(size * size);
  std::vector<std::size_t> cols;
  for (std::size_t b = 0; b < out.basis.size(); ++b) {
    const FockState& pattern = out.basis[b];
    cols.clear();
    double output_norm = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      for (int r = 0; r < pattern[j]; ++r) cols.push_back(j);
      output_norm *= factorial(pattern[j]);
    }
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t c = 0; c < size; ++c) sub[a * size + c] = v(rows[a], cols[c]);
    out.amplitudes[b] = k.permanent(sub, size) / std::sqrt(input_norm * output_norm);
  }
  return out;
}

const std::array<FockState, 6>& two_photon_presentation_basis() {
  static const std::array<FockState, 6> basis = {
      FockState({2, 0, 0}), FockState({0, 2, 0}), FockState({0, 0, 2}),
      FockState({1, 1, 0}), FockState({1, 0, 1}), FockState({0, 1, 1})};
  return basis;
}

std::array<Complex, 6> presentation_amplitudes(const FockVector& v) {
  std::array<Complex, 6> out{};
  const auto& basis = two_photon_presentation_basis();
  for (std::size_t k = 0; k < 6; ++k) out[k] = v.amplitude(basis[k]);
  return out;
}

std::array<Complex, 6> two_photon_same_port_closed_form(const AmplitudeVector& c) {
  if (c.size() != 3) throw Error(ErrorKind::kDimensionMismatch, "closed form needs d = 3");
  return {c[0] * c[0],         c[1] * c[1],         c[2] * c[2],
          kSqrt2 * c[0] * c[1], kSqrt2 * c[0] * c[2], kSqrt2 * c[1] * c[2]};
}

std::array<Complex, 6> two_photon_two_port_closed_form(const AmplitudeVector& c) {
  if (c.size() != 3) throw Error(ErrorKind::kDimensionMismatch, "closed form needs d = 3");
  return {kSqrt2 * c[0] * c[1],        kSqrt2 * c[1] * c[2],        kSqrt2 * c[2] * c[0],
          c[0] * c[2] + c[1] * c[1], c[1] * c[2] + c[0] * c[0], c[0] * c[1] + c[2] * c[2]};
}

TwoPhotonReport two_photon_same_port_conditions(const ProbabilityDistribution& target,
                                                double tolerance) {
  const std::array<double, 6> alpha = target_amplitudes(target);
  TwoPhotonReport out;
  out.report.verdict = Verdict::kInfeasible;

  // Outcome jk (j < k) pairs with jj and kk.
  static constexpr std::size_t kPair[3][3] = {{3, 0, 1}, {4, 0, 2}, {5, 1, 2}};
  static constexpr const char* kName[3] = {"110", "101", "011"};
  static constexpr const char* kDiag[3][2] = {{"200", "020"}, {"200", "002"}, {"020", "002"}};
  bool relations_hold = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const double expected = kSqrt2 * std::sqrt(alpha[kPair[i][1]] * alpha[kPair[i][2]]);
    out.relation_residuals[i] = std::abs(alpha[kPair[i][0]] - expected);
    if (out.relation_residuals[i] > tolerance) {
      relations_hold = false;
      out.report.notes.push_back(std::string("bunching relation violated: |a_") + kName[i] + "| = " +
                                 fmt("%.9g, but sqrt(2)*sqrt(|a_", alpha[kPair[i][0]], 0) +
                                 kDiag[i][0] + "||a_" + kDiag[i][1] + "|) = " +
                                 fmt("%.9g", expected, 0));
    }
  }
  if (!relations_hold) return out;

  const std::array<double, 3> x =
      normalized3({std::sqrt(alpha[0]), std::sqrt(alpha[1]), std::sqrt(alpha[2])});
  out.magnitudes = x;
  if (!apply_triangle(out, x)) return out;
  finish_by_round_trip(out, x, FockState({2, 0, 0}), alpha, tolerance);
  return out;
}

TwoPhotonReport two_photon_two_port_conditions(const ProbabilityDistribution& target,
                                               double tolerance) {
  const std::array<double, 6> alpha = target_amplitudes(target);
  TwoPhotonReport out;
  out.report.verdict = Verdict::kInfeasible;
  const FockState input({1, 1, 0});

  const bool zero01 = alpha[0] <= kZeroMagnitude;
  const bool zero12 = alpha[1] <= kZeroMagnitude;
  const bool zero02 = alpha[2] <= kZeroMagnitude;
  if (zero01 || zero12 || zero02) {
    if (!(zero01 && zero12 && zero02)) {
      // A zero product with another product nonzero leaves exactly two
      // nonzero |c_k|, which no 3-port state has.
      out.report.notes.push_back(
          "product relations force exactly two nonzero single-photon amplitudes, which a "
          "3-port interferometer cannot produce");
      return out;
    }
    // All products vanish: only single-mode states remain. Try each.
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<Complex> e(3, Complex(0.0, 0.0));
      e[k] = 1.0;
      const PhaseRecovery rec = phases_for_state(AmplitudeVector(std::move(e)));
      const double residual = round_trip(*rec.phases, input, alpha);
      if (!out.round_trip_residual || residual < *out.round_trip_residual) {
        out.round_trip_residual = residual;
      }
      if (residual <= tolerance) {
        out.report.verdict = Verdict::kFeasible;
        out.phases = rec.phases;
        std::array<double, 3> x{};
        x[k] = 1.0;
        out.magnitudes = x;
        out.report.notes.push_back("single-mode state c = e_" + std::to_string(k));
        return out;
      }
    }
    out.report.notes.push_back("no single-mode state reproduces the target");
    return out;
  }

  // |c0|^2 ~ a200 a002 / a020, |c1|^2 ~ a200 a020 / a002, |c2|^2 ~ a020 a002 / a200.
  const std::array<double, 3> x = normalized3({std::sqrt(alpha[0] * alpha[2] / alpha[1]),
                                               std::sqrt(alpha[0] * alpha[1] / alpha[2]),
                                               std::sqrt(alpha[1] * alpha[2] / alpha[0])});
  out.magnitudes = x;

  // With the scale fixed by normalization the products must match exactly.
  const double implied[3] = {kSqrt2 * x[0] * x[1], kSqrt2 * x[1] * x[2], kSqrt2 * x[0] * x[2]};
  bool ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    out.relation_residuals[i] = std::abs(alpha[i] - implied[i]);
    if (out.relation_residuals[i] > tolerance) {
      ok = false;
      out.report.notes.push_back(
          fmt("product relation scale mismatch: target %.9g, normalized magnitudes give %.9g",
              alpha[i], implied[i]));
    }
  }

  // |u + v| lies in [| |u| - |v| |, |u| + |v|] for the mixed outcomes.
  const double u[3] = {x[0] * x[2], x[1] * x[2], x[0] * x[1]};
  const double w[3] = {x[1] * x[1], x[0] * x[0], x[2] * x[2]};
  static constexpr const char* kMixed[3] = {"110", "101", "011"};
  for (std::size_t i = 0; i < 3; ++i) {
    const double lo = std::abs(u[i] - w[i]);
    const double hi = u[i] + w[i];
    const double a = alpha[3 + i];
    if (a < lo - tolerance || a > hi + tolerance) {
      ok = false;
      out.report.notes.push_back(std::string("mixed outcome ") + kMixed[i] +
                                 fmt(" amplitude %.9g outside the reachable band", a, 0) +
                                 fmt(" [%.9g, %.9g]", lo, hi));
    }
  }
  if (!ok) return out;
  if (!apply_triangle(out, x)) return out;
  finish_by_round_trip(out, x, input, alpha, tolerance);
  return out;
}

}  // namespace multiport
