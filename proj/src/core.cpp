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

#include "multiport/core.hpp"

#include <algorithm>
#include <cmath>

namespace multiport {

namespace {

// exp(2 pi i k / d) with k reduced first, so large m*n products do not lose
// accuracy in the angle.
Complex root_of_unity(std::size_t k, std::size_t d) {
  const double angle = 2.0 * kPi * static_cast<double>(k % d) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

}  // namespace

Matrix dft_matrix(Dimension d) {
  const std::size_t n = d.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix f(n, n, MatrixRole::kDft);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) f(m, k) = scale * root_of_unity(m * k, n);
  return f;
}

Matrix phase_diagonal(const PhaseVector& lambda) {
  Matrix p(lambda.size(), lambda.size(), MatrixRole::kPhaseDiagonal);
  for (std::size_t k = 0; k < lambda.size(); ++k) p(k, k) = lambda[k];
  return p;
}

Matrix interferometer(const PhaseVector& lambda) {
  const Matrix f = dft_matrix(lambda.dimension());
  // F diag(lambda) scales the columns of F.
  Matrix fp = f;
  for (std::size_t r = 0; r < fp.rows(); ++r)
    for (std::size_t k = 0; k < fp.cols(); ++k) fp(r, k) *= lambda[k];
  Matrix u = fp * f;
  u.set_role(MatrixRole::kInterferometer);
  return u;
}

AmplitudeVector output_amplitudes(const PhaseVector& lambda, int input_port) {
  const std::size_t d = lambda.size();
  if (input_port < 0 || static_cast<std::size_t>(input_port) >= d) {
    throw Error(ErrorKind::kPortOutOfRange, "input port " + std::to_string(input_port) +
                                                " outside [0, " + std::to_string(d) + ")");
  }
  if (input_port == 0) {
    const Matrix f = dft_matrix(lambda.dimension());
    std::vector<Complex> c = apply(f, lambda.values());
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (auto& v : c) v *= scale;
    return AmplitudeVector::normalized(std::move(c));
  }
  return AmplitudeVector::normalized(
      interferometer(lambda).column(static_cast<std::size_t>(input_port)));
}

PhaseRecovery phases_for_state(const AmplitudeVector& c, double tolerance) {
  const std::size_t d = c.size();
  const Matrix f_adj = dft_matrix(c.dimension()).adjoint();
  PhaseRecovery out;
  out.raw = apply(f_adj, c.values());
  const double scale = std::sqrt(static_cast<double>(d));
  out.deviations.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    out.raw[k] *= scale;
    out.deviations[k] = std::abs(std::abs(out.raw[k]) - 1.0);
    out.max_deviation = std::max(out.max_deviation, out.deviations[k]);
  }
  out.feasible = out.max_deviation <= tolerance;
  if (out.feasible) out.phases = PhaseVector::normalized(out.raw);
  return out;
}

}  // namespace multiport
