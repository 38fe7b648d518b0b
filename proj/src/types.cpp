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

#include "multiport/types.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace multiport {

namespace {

constexpr double kUnitModulusSlack = 1e-12;
constexpr double kAmplitudeNormSlack = 1e-12;
constexpr double kProbabilitySumSlack = 1e-10;

void require_dimension(std::size_t n, const char* what) {
  if (n < 2) {
    std::ostringstream os;
    os << what << " needs at least 2 entries, got " << n;
    throw Error(ErrorKind::kDimensionTooSmall, os.str());
  }
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionTooSmall: return "dimension-too-small";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kInvalidPhase: return "invalid-phase";
    case ErrorKind::kNotNormalized: return "not-normalized";
    case ErrorKind::kInvalidDistribution: return "invalid-distribution";
    case ErrorKind::kPortOutOfRange: return "port-out-of-range";
    case ErrorKind::kIndexOutOfRange: return "index-out-of-range";
    case ErrorKind::kDegenerateMagnitudes: return "degenerate-magnitudes";
    case ErrorKind::kTriangleViolation: return "triangle-violation";
    case ErrorKind::kInconsistentInput: return "inconsistent-input";
    case ErrorKind::kPhotonLimit: return "photon-limit";
    case ErrorKind::kInvalidConfig: return "invalid-config";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

Dimension::Dimension(int d) : d_(d) {
  if (d < 2) {
    throw Error(ErrorKind::kDimensionTooSmall,
                "interferometer dimension must be >= 2, got " + std::to_string(d));
  }
}

PhaseVector PhaseVector::from_complex(std::vector<Complex> lambda) {
  require_dimension(lambda.size(), "phase vector");
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const double dev = std::abs(std::abs(lambda[k]) - 1.0);
    if (!std::isfinite(dev) || dev > kUnitModulusSlack) {
      std::ostringstream os;
      os << "phase " << k << " has modulus " << std::abs(lambda[k]) << ", expected 1";
      throw Error(ErrorKind::kInvalidPhase, os.str());
    }
  }
  return PhaseVector(std::move(lambda));
}

PhaseVector PhaseVector::normalized(std::vector<Complex> lambda) {
  require_dimension(lambda.size(), "phase vector");
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const double r = std::abs(lambda[k]);
    if (!std::isfinite(r) || r < kZeroMagnitude) {
      throw Error(ErrorKind::kInvalidPhase,
                  "phase " + std::to_string(k) + " cannot be normalized");
    }
    lambda[k] /= r;
  }
  return PhaseVector(std::move(lambda));
}

PhaseVector PhaseVector::from_radians(std::span<const double> theta) {
  require_dimension(theta.size(), "phase vector");
  std::vector<Complex> lambda(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (!std::isfinite(theta[k])) {
      throw Error(ErrorKind::kInvalidPhase, "phase " + std::to_string(k) + " is not finite");
    }
    lambda[k] = std::polar(1.0, theta[k]);
  }
  return PhaseVector(std::move(lambda));
}

std::vector<double> PhaseVector::radians() const {
  std::vector<double> out(lambda_.size());
  for (std::size_t k = 0; k < lambda_.size(); ++k) out[k] = std::arg(lambda_[k]);
  return out;
}

AmplitudeVector::AmplitudeVector(std::vector<Complex> c) : c_(std::move(c)) {
  require_dimension(c_.size(), "amplitude vector");
  double norm2 = 0.0;
  for (const auto& v : c_) norm2 += std::norm(v);
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kAmplitudeNormSlack) {
    std::ostringstream os;
    os << "amplitude vector has squared norm " << norm2 << ", expected 1";
    throw Error(ErrorKind::kNotNormalized, os.str());
  }
}

AmplitudeVector AmplitudeVector::normalized(std::vector<Complex> c) {
  double norm2 = 0.0;
  for (const auto& v : c) norm2 += std::norm(v);
  if (!std::isfinite(norm2) || norm2 <= 0.0) {
    throw Error(ErrorKind::kNotNormalized, "cannot normalize a zero amplitude vector");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& v : c) v *= scale;
  return AmplitudeVector(std::move(c));
}

const Complex& AmplitudeVector::at_cyclic(long m) const {
  return c_[wrap_index(m, c_.size())];
}

std::vector<double> AmplitudeVector::magnitudes() const {
  std::vector<double> out(c_.size());
  for (std::size_t m = 0; m < c_.size(); ++m) out[m] = std::abs(c_[m]);
  return out;
}

std::vector<double> AmplitudeVector::probabilities() const {
  std::vector<double> out(c_.size());
  for (std::size_t m = 0; m < c_.size(); ++m) out[m] = std::norm(c_[m]);
  return out;
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> p) : p_(std::move(p)) {
  require_dimension(p_.size(), "probability distribution");
  for (std::size_t m = 0; m < p_.size(); ++m) {
    if (!std::isfinite(p_[m]) || p_[m] < 0.0) {
      throw Error(ErrorKind::kInvalidDistribution,
                  "probability " + std::to_string(m) + " is negative or not finite");
    }
  }
  const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(total - 1.0) > kProbabilitySumSlack) {
    std::ostringstream os;
    os.precision(15);
    os << "probabilities sum to " << total << ", expected 1";
    throw Error(ErrorKind::kInvalidDistribution, os.str());
  }
}

std::vector<double> ProbabilityDistribution::magnitudes() const {
  std::vector<double> out(p_.size());
  for (std::size_t m = 0; m < p_.size(); ++m) out[m] = std::sqrt(p_[m]);
  return out;
}

}  // namespace multiport
