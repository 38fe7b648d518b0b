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

#include <gtest/gtest.h>

#include <random>

#include "multiport/core.hpp"
#include "multiport/fock.hpp"
#include "oracles.hpp"

namespace multiport {
namespace {

const PhaseVector kWorked =
    PhaseVector::from_radians(std::vector<double>{kPi / 2, -kPi / 6, -kPi / 6});

std::vector<Complex> raw(std::span<const Complex> v) { return {v.begin(), v.end()}; }

oracle::CMat as_rows(const TransferMatrix& v) {
  oracle::CMat m(v.modes(), std::vector<Complex>(v.modes()));
  for (std::size_t i = 0; i < v.modes(); ++i)
    for (std::size_t j = 0; j < v.modes(); ++j) m[i][j] = v(i, j);
  return m;
}

PhaseVector random_phases(std::mt19937_64& rng, std::size_t d) {
  return PhaseVector::from_radians(oracle::random_angles(rng, d));
}

TEST(FockState, LabelsAndTotals) {
  const FockState s({2, 0, 1});
  EXPECT_EQ(s.total(), 3);
  EXPECT_EQ(s.label(), "201");
  EXPECT_EQ(FockState({10, 0}).label(), "10,0");
  EXPECT_THROW(FockState({1, -1}), Error);
}

TEST(FockBasis, DescendingLexicographicOrder) {
  const auto b = fock_basis(3, 2);
  std::vector<std::string> labels;
  for (const auto& s : b) labels.push_back(s.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"200", "110", "101", "020", "011", "002"}));
  for (std::size_t d = 1; d <= 6; ++d)
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(fock_basis(d, n).size(), fock_sector_size(d, n));
  EXPECT_EQ(fock_sector_size(3, 6), 28u);
}

TEST(TransferMatrix, IdentityPhasesGiveReflection) {
  const TransferMatrix v = transfer_matrix(PhaseVector::from_radians(std::vector<double>{0, 0, 0}));
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n)
      EXPECT_NEAR(std::abs(v(m, n)), (m + n) % 3 == 0 ? 1.0 : 0.0, 1e-12);
}

TEST(TransferMatrix, IsUnitaryTransposeOfU) {
  std::mt19937_64 rng(41);
  for (int d = 2; d <= 8; ++d) {
    const PhaseVector lambda = random_phases(rng, d);
    const TransferMatrix v = transfer_matrix(lambda);
    const auto u = oracle::interferometer(raw(lambda.values()));
    EXPECT_LE(v.matrix().unitarity_defect(), 1e-10);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) EXPECT_NEAR(std::abs(v(m, n) - u[n][m]), 0.0, 1e-12);
  }
}

TEST(TransferMatrix, RejectsNonUnitary) {
  Matrix m(2, 2);
  m(0, 0) = 1.0;
  EXPECT_THROW(TransferMatrix{m}, Error);
}

TEST(Propagate, SinglePhotonIsARowOfV) {
  std::mt19937_64 rng(42);
  for (int d = 2; d <= 6; ++d) {
    const PhaseVector lambda = random_phases(rng, d);
    const TransferMatrix v = transfer_matrix(lambda);
    std::vector<int> occ(d, 0);
    occ[0] = 1;
    const FockVector out = propagate(FockState(occ), v);
    const AmplitudeVector c = output_amplitudes(lambda, 0);
    for (int m = 0; m < d; ++m) {
      std::vector<int> pattern(d, 0);
      pattern[m] = 1;
      EXPECT_NEAR(std::abs(out.amplitude(FockState(pattern)) - c[m]), 0.0, 1e-12);
    }
  }
}

TEST(Propagate, MatchesCreationOperatorExpansion) {
  std::mt19937_64 rng(43);
  for (int d = 2; d <= 4; ++d) {
    const TransferMatrix v = transfer_matrix(random_phases(rng, d));
    for (int n = 0; n <= 3; ++n) {
      for (const FockState& in : fock_basis(d, n)) {
        const FockVector out = propagate(in, v);
        const auto want = oracle::expand(in.occupations(), as_rows(v));
        ASSERT_EQ(out.basis.size(), want.size());
        for (std::size_t i = 0; i < out.basis.size(); ++i) {
          EXPECT_NEAR(std::abs(out.amplitudes[i] - want.at(out.basis[i].occupations())), 0.0, 1e-10)
              << in.label() << " -> " << out.basis[i].label();
        }
      }
    }
  }
}

TEST(Propagate, ConservesPhotonNumberAndNorm) {
  std::mt19937_64 rng(44);
  for (int d = 2; d <= 5; ++d) {
    const TransferMatrix v = transfer_matrix(random_phases(rng, d));
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> occ(d, 0);
      for (int k = 0; k < n; ++k) ++occ[k % d];
      const FockVector out = propagate(FockState(occ), v);
      for (const auto& s : out.basis) EXPECT_EQ(s.total(), n);
      EXPECT_NEAR(out.norm(), 1.0, 1e-10);
    }
  }
}

TEST(Propagate, PhotonLimitAndShapeErrors) {
  const TransferMatrix v = transfer_matrix(kWorked);
  EXPECT_THROW(propagate(FockState({7, 0, 0}), v), Error);
  EXPECT_NO_THROW(propagate(FockState({7, 0, 0}), v, {7}));
  EXPECT_THROW(propagate(FockState({1, 0}), v), Error);
  const FockVector vac = propagate(FockState({0, 0, 0}), v);
  ASSERT_EQ(vac.amplitudes.size(), 1u);
  EXPECT_EQ(vac.amplitudes[0], Complex(1.0, 0.0));
}

TEST(TwoPhoton, ClosedFormsMatchPropagation) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const PhaseVector lambda = random_phases(rng, 3);
    const AmplitudeVector c = output_amplitudes(lambda, 0);
    const TransferMatrix v = transfer_matrix(lambda);
    const auto same = presentation_amplitudes(propagate(FockState({2, 0, 0}), v));
    const auto two = presentation_amplitudes(propagate(FockState({1, 1, 0}), v));
    const auto same_cf = two_photon_same_port_closed_form(c);
    const auto two_cf = two_photon_two_port_closed_form(c);
    for (int k = 0; k < 6; ++k) {
      EXPECT_NEAR(std::abs(same[k] - same_cf[k]), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(two[k] - two_cf[k]), 0.0, 1e-12);
    }
  }
}

// Unnormalized products (2 c0 c1 for 110, c0 c1 for 200 from 110) do not
// describe normalized Fock amplitudes; one rescaling cannot repair them.
TEST(TwoPhoton, UnnormalizedProductFormsDisagree) {
  const AmplitudeVector c = output_amplitudes(kWorked, 0);
  const TransferMatrix v = transfer_matrix(kWorked);
  const auto same = presentation_amplitudes(propagate(FockState({2, 0, 0}), v));
  const auto product = oracle::product_same_port(raw(c.values()));
  double worst = 0.0;
  for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(same[k] - product[k]));
  EXPECT_GT(worst, 1e-2);
}

TEST(TwoPhoton, WorkedPhasesGiveMultinomialSplit) {
  const FockVector out = propagate(FockState({2, 0, 0}), transfer_matrix(kWorked));
  const auto a = presentation_amplitudes(out);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::norm(a[k]), 1.0 / 9.0, 1e-12);
  for (int k = 3; k < 6; ++k) EXPECT_NEAR(std::norm(a[k]), 2.0 / 9.0, 1e-12);
}

TEST(TwoPhoton, BunchingRelation) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = presentation_amplitudes(propagate(FockState({2, 0, 0}), transfer_matrix(random_phases(rng, 3))));
    EXPECT_NEAR(std::abs(a[3]), std::sqrt(2.0) * std::sqrt(std::abs(a[0]) * std::abs(a[1])), 1e-12);
    EXPECT_NEAR(std::abs(a[4]), std::sqrt(2.0) * std::sqrt(std::abs(a[0]) * std::abs(a[2])), 1e-12);
    EXPECT_NEAR(std::abs(a[5]), std::sqrt(2.0) * std::sqrt(std::abs(a[1]) * std::abs(a[2])), 1e-12);
  }
}

ProbabilityDistribution presentation_probabilities(const std::array<Complex, 6>& a) {
  std::vector<double> p(6);
  double s = 0.0;
  for (int k = 0; k < 6; ++k) s += p[k] = std::norm(a[k]);
  for (double& v : p) v /= s;
  return ProbabilityDistribution(p);
}

TEST(SamePortConditions, UniformMultinomialIsFeasible) {
  const TwoPhotonReport r = two_photon_same_port_conditions(
      ProbabilityDistribution({1 / 9., 1 / 9., 1 / 9., 2 / 9., 2 / 9., 2 / 9.}));
  EXPECT_EQ(r.report.verdict, Verdict::kFeasible);
  ASSERT_TRUE(r.phases);
  ASSERT_TRUE(r.round_trip_residual);
  EXPECT_LE(*r.round_trip_residual, 1e-9);
}

TEST(SamePortConditions, FifteenthsViolateBunchingRelation) {
  const TwoPhotonReport r = two_photon_same_port_conditions(
      ProbabilityDistribution({1 / 15., 1 / 15., 1 / 15., 4 / 15., 4 / 15., 4 / 15.}));
  EXPECT_EQ(r.report.verdict, Verdict::kInfeasible);
  EXPECT_FALSE(r.phases);
  ASSERT_FALSE(r.report.notes.empty());
  EXPECT_NE(r.report.notes.front().find("bunching"), std::string::npos);
}

TEST(SamePortConditions, DeterministicBunching) {
  const TwoPhotonReport r = two_photon_same_port_conditions(ProbabilityDistribution({1, 0, 0, 0, 0, 0}));
  ASSERT_EQ(r.report.verdict, Verdict::kFeasible);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::abs((*r.phases)[k] - 1.0), 0.0, 1e-12);
}

TEST(SamePortConditions, RandomPhasesRoundTrip) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = presentation_amplitudes(propagate(FockState({2, 0, 0}), transfer_matrix(random_phases(rng, 3))));
    const TwoPhotonReport r = two_photon_same_port_conditions(presentation_probabilities(a));
    EXPECT_EQ(r.report.verdict, Verdict::kFeasible);
  }
}

TEST(SamePortConditions, TriangleStageCatchesSkewedMagnitudes) {
  // Built from |c| = sqrt(0.9, 0.09, 0.01), consistent with the bunching
  // relations but not with any 3-port state.
  const double p[3] = {0.9, 0.09, 0.01};
  std::vector<double> t = {p[0] * p[0], p[1] * p[1], p[2] * p[2], 2 * p[0] * p[1], 2 * p[0] * p[2], 2 * p[1] * p[2]};
  const TwoPhotonReport r = two_photon_same_port_conditions(ProbabilityDistribution(t));
  EXPECT_EQ(r.report.verdict, Verdict::kInfeasible);
  EXPECT_LE(r.relation_residuals[0], 1e-12);
  ASSERT_FALSE(r.report.notes.empty());
  EXPECT_NE(r.report.notes.front().find("triangle"), std::string::npos);
}

TEST(TwoPortConditions, RandomPhasesRoundTrip) {
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = presentation_amplitudes(propagate(FockState({1, 1, 0}), transfer_matrix(random_phases(rng, 3))));
    const TwoPhotonReport r = two_photon_two_port_conditions(presentation_probabilities(a));
    EXPECT_EQ(r.report.verdict, Verdict::kFeasible) << (r.report.notes.empty() ? "" : r.report.notes[0]);
    ASSERT_TRUE(r.round_trip_residual);
    EXPECT_LE(*r.round_trip_residual, 1e-9);
  }
}

TEST(TwoPortConditions, UniformMultinomialDecidedByRoundTrip) {
  const TwoPhotonReport r = two_photon_two_port_conditions(
      ProbabilityDistribution({1 / 9., 1 / 9., 1 / 9., 2 / 9., 2 / 9., 2 / 9.}));
  ASSERT_TRUE(r.magnitudes);
  for (double x : *r.magnitudes) EXPECT_NEAR(x, 1.0 / std::sqrt(3.0), 1e-12);
  // The products give uniform |c|, but sqrt(2)/3 != sqrt(1/9): the scale
  // check fails before any synthesis.
  EXPECT_EQ(r.report.verdict, Verdict::kInfeasible);
}

TEST(TwoPortConditions, DegenerateProducts) {
  const TwoPhotonReport r =
      two_photon_two_port_conditions(ProbabilityDistribution({0.5, 0, 0, 0.5, 0, 0}));
  EXPECT_EQ(r.report.verdict, Verdict::kInfeasible);
  // Single-mode c = e_k sends |110> to a unique outcome; find which.
  const auto a = presentation_amplitudes(
      propagate(FockState({1, 1, 0}), transfer_matrix(PhaseVector::from_radians(std::vector<double>{0, 0, 0}))));
  const TwoPhotonReport ok = two_photon_two_port_conditions(presentation_probabilities(a));
  EXPECT_EQ(ok.report.verdict, Verdict::kFeasible);
}

}  // namespace
}  // namespace multiport
