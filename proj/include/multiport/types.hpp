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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiport {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Default absolute tolerance for feasibility verdicts: residual magnitudes,
/// unit-modulus deviations and synthesis round trips.
inline constexpr double kDefaultTolerance = 1e-9;

/// Magnitudes below this are treated as exact zeros in degenerate-case logic.
inline constexpr double kZeroMagnitude = 1e-12;

enum class ErrorKind {
  kDimensionTooSmall,
  kDimensionMismatch,
  kInvalidPhase,
  kNotNormalized,
  kInvalidDistribution,
  kPortOutOfRange,
  kIndexOutOfRange,
  kDegenerateMagnitudes,
  kTriangleViolation,
  kInconsistentInput,
  kPhotonLimit,
  kInvalidConfig,
  kInternal,
};

const char* to_string(ErrorKind kind);

/// All validation failures raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Number of interferometer ports; always at least 2.
class Dimension {
 public:
  explicit Dimension(int d);

  int value() const noexcept { return d_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(d_); }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int d_;
};

/// Unit-modulus phase shifts applied between the two multiports.
class PhaseVector {
 public:
  /// Rejects entries whose modulus differs from 1 by more than 1e-12.
  static PhaseVector from_complex(std::vector<Complex> lambda);
  /// Divides every entry by its modulus; rejects near-zero entries.
  static PhaseVector normalized(std::vector<Complex> lambda);
  static PhaseVector from_radians(std::span<const double> theta);

  Dimension dimension() const { return Dimension(static_cast<int>(lambda_.size())); }
  std::size_t size() const noexcept { return lambda_.size(); }
  const Complex& operator[](std::size_t k) const { return lambda_[k]; }
  std::span<const Complex> values() const noexcept { return lambda_; }

  /// Arguments in (-pi, pi].
  std::vector<double> radians() const;

 private:
  explicit PhaseVector(std::vector<Complex> lambda) : lambda_(std::move(lambda)) {}

  std::vector<Complex> lambda_;
};

/// Single-photon output amplitudes c_0..c_{d-1}. Index arithmetic is cyclic.
class AmplitudeVector {
 public:
  /// Rejects vectors whose squared norm differs from 1 by more than 1e-12.
  explicit AmplitudeVector(std::vector<Complex> c);
  /// Rescales to unit norm; rejects the zero vector.
  static AmplitudeVector normalized(std::vector<Complex> c);

  Dimension dimension() const { return Dimension(static_cast<int>(c_.size())); }
  std::size_t size() const noexcept { return c_.size(); }
  const Complex& operator[](std::size_t m) const { return c_[m]; }
  /// c_{m mod d}, for any integer m.
  const Complex& at_cyclic(long m) const;
  std::span<const Complex> values() const noexcept { return c_; }

  std::vector<double> magnitudes() const;
  std::vector<double> probabilities() const;

 private:
  std::vector<Complex> c_;
};

/// Photon detection probabilities over d outputs.
class ProbabilityDistribution {
 public:
  /// Requires p_m >= 0 and sum within 1e-10 of 1.
  explicit ProbabilityDistribution(std::vector<double> p);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t m) const { return p_[m]; }
  std::span<const double> values() const noexcept { return p_; }

  /// sqrt(p_m), the magnitudes |c_m| any realizing state must have.
  std::vector<double> magnitudes() const;

 private:
  std::vector<double> p_;
};

/// Reduces m into [0, d).
inline std::size_t wrap_index(long m, std::size_t d) {
  const long sd = static_cast<long>(d);
  long r = m % sd;
  if (r < 0) r += sd;
  return static_cast<std::size_t>(r);
}

}  // namespace multiport
