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

// Multi-photon propagation through the interferometer.
//
// Input creation operators map as a_m^dagger -> sum_k V_mk b_k^dagger with
// V = U^T. The amplitude from occupation pattern n to pattern m is
//
//   <m| out> = Per(V[n-repeated rows, m-repeated cols]) / sqrt(prod n_i! prod m_j!)
//
// and Fock states are normalized, |2_k> = (b_k^dagger)^2 |0> / sqrt(2).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "multiport/feasibility.hpp"
#include "multiport/matrix.hpp"
#include "multiport/types.hpp"

namespace multiport {

class FockState {
 public:
  explicit FockState(std::vector<int> occupations);

  std::size_t modes() const noexcept { return occupations_.size(); }
  int total() const noexcept { return total_; }
  int operator[](std::size_t k) const { return occupations_[k]; }
  const std::vector<int>& occupations() const noexcept { return occupations_; }

  /// "200" style when every count is a single digit, otherwise "2,10,0".
  std::string label() const;

  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  std::vector<int> occupations_;
  int total_ = 0;
};

/// Every occupation pattern of `photons` over `modes`, in descending
/// lexicographic order (d = 3, n = 2: 200, 110, 101, 020, 011, 002).
std::vector<FockState> fock_basis(std::size_t modes, int photons);

/// C(n + d - 1, d - 1).
std::size_t fock_sector_size(std::size_t modes, int photons);

struct FockVector {
  std::vector<FockState> basis;
  std::vector<Complex> amplitudes;

  double norm() const;
  std::vector<double> probabilities() const;
  /// Amplitude of `state`; zero when it is not in the basis.
  Complex amplitude(const FockState& state) const;
};

/// Unitary mode transfer matrix, V_mn = c_{(m + n) mod d} for F P F devices.
class TransferMatrix {
 public:
  /// Rejects non-square or non-unitary (defect > 1e-10) input.
  explicit TransferMatrix(Matrix v);

  std::size_t modes() const noexcept { return v_.rows(); }
  const Matrix& matrix() const noexcept { return v_; }
  const Complex& operator()(std::size_t m, std::size_t n) const { return v_(m, n); }

 private:
  Matrix v_;
};

/// Builds V from c = output_amplitudes(lambda, 0) and checks V = U^T.
TransferMatrix transfer_matrix(const PhaseVector& lambda);

struct PropagationOptions {
  int max_photons = 6;
};

/// Output superposition over the full n-photon sector.
FockVector propagate(const FockState& input, const TransferMatrix& v,
                     const PropagationOptions& options = {});

/// Two-photon, three-mode outcomes in the order 200, 020, 002, 110, 101, 011.
const std::array<FockState, 6>& two_photon_presentation_basis();

/// Amplitudes of a 3-mode, 2-photon vector in presentation order.
std::array<Complex, 6> presentation_amplitudes(const FockVector& v);

/// Closed-form outputs for inputs |200> and |110> of a 3-port device with
/// port-0 amplitudes c, in presentation order, as normalized Fock amplitudes.
std::array<Complex, 6> two_photon_same_port_closed_form(const AmplitudeVector& c);
std::array<Complex, 6> two_photon_two_port_closed_form(const AmplitudeVector& c);

struct TwoPhotonReport {
  FeasibilityReport report;
  /// Deviation of each pairwise relation (three entries) from equality.
  std::array<double, 3> relation_residuals{};
  /// Candidate single-photon magnitudes |c_k|, when derivable.
  std::optional<std::array<double, 3>> magnitudes;
  /// Realizing phases, present iff the verdict is feasible.
  std::optional<PhaseVector> phases;
  /// max over outcomes of | |achieved amplitude| - sqrt(target) |.
  std::optional<double> round_trip_residual;
};

/// Both photons enter port 0 (input |200>). Target probabilities are in
/// presentation order. Checks the pairwise bunching relations
/// |a_jk| = sqrt(2) sqrt(|a_jj| |a_kk|), the triangle inequalities on
/// |c_k| = sqrt(|a_kk|), then confirms by synthesis and propagation.
TwoPhotonReport two_photon_same_port_conditions(const ProbabilityDistribution& target,
                                                double tolerance = kDefaultTolerance);

/// Photons enter ports 0 and 1 (input |110>). Inverts the three product
/// relations |a_200| = sqrt(2)|c0||c1|, |a_020| = sqrt(2)|c1||c2|,
/// |a_002| = sqrt(2)|c0||c2| for |c_k|, screens the mixed outcomes, applies
/// the triangle inequalities and decides by round trip.
TwoPhotonReport two_photon_two_port_conditions(const ProbabilityDistribution& target,
                                               double tolerance = kDefaultTolerance);

}  // namespace multiport
