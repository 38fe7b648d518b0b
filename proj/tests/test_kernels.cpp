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

#include "multiport/kernels.hpp"
#include "oracles.hpp"

namespace multiport::kernels {
namespace {

std::vector<Complex> random_complex(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(n);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v;
}

bool have_avx2() { return isa_available(Isa::kAvx2); }

TEST(Dispatch, ScalarAlwaysAvailable) {
  EXPECT_TRUE(isa_available(Isa::kScalar));
  EXPECT_EQ(kernels_for(Isa::kScalar).isa, Isa::kScalar);
}

TEST(Dispatch, ForceAndReset) {
  const Isa automatic = active_isa();
  force_isa(Isa::kScalar);
  EXPECT_EQ(active_isa(), Isa::kScalar);
  EXPECT_EQ(kernels().isa, Isa::kScalar);
  reset_isa();
  EXPECT_EQ(active_isa(), automatic);
  if (!have_avx2()) {
    EXPECT_THROW(force_isa(Isa::kAvx2), Error);
  }
}

TEST(ScalarKernels, MatVecMatchesDirectSum) {
  std::mt19937_64 rng(1);
  for (std::size_t rows : {1u, 2u, 3u, 5u, 8u}) {
    for (std::size_t cols : {1u, 2u, 3u, 7u, 9u}) {
      const auto a = random_complex(rng, rows * cols);
      const auto x = random_complex(rng, cols);
      std::vector<Complex> y(rows);
      scalar::matvec(a, rows, cols, x, y);
      for (std::size_t r = 0; r < rows; ++r) {
        Complex want = 0.0;
        for (std::size_t c = 0; c < cols; ++c) want += a[r * cols + c] * x[c];
        EXPECT_NEAR(std::abs(y[r] - want), 0.0, 1e-12);
      }
    }
  }
}

TEST(ScalarKernels, PermanentMatchesPermutationSum) {
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto a = random_complex(rng, n * n);
    oracle::CMat m(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i * n + j];
    const Complex want = oracle::permanent(m);
    EXPECT_NEAR(std::abs(scalar::permanent(a, n) - want), 0.0, 1e-10 * std::max(1.0, std::abs(want)))
        << "n=" << n;
  }
  EXPECT_EQ(scalar::permanent({}, 0), Complex(1.0, 0.0));
}

TEST(ScalarKernels, PermanentOfRepeatedRows) {
  // Per of the all-ones n x n matrix is n!.
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<Complex> ones(n * n, 1.0);
    EXPECT_NEAR(scalar::permanent(ones, n).real(), oracle::factorial(static_cast<int>(n)), 1e-9);
  }
}

#if defined(MULTIPORT_HAVE_AVX2)

TEST(Avx2Equivalence, MatVec) {
  if (!have_avx2()) GTEST_SKIP() << "CPU lacks AVX2/FMA";
  std::mt19937_64 rng(3);
  for (std::size_t rows = 1; rows <= 12; ++rows) {
    for (std::size_t cols = 1; cols <= 13; ++cols) {
      const auto a = random_complex(rng, rows * cols);
      const auto x = random_complex(rng, cols);
      std::vector<Complex> ys(rows), yv(rows);
      scalar::matvec(a, rows, cols, x, ys);
      avx2::matvec(a, rows, cols, x, yv);
      for (std::size_t r = 0; r < rows; ++r) {
        EXPECT_NEAR(std::abs(ys[r] - yv[r]), 0.0, 1e-12 * (1.0 + std::abs(ys[r])));
      }
    }
  }
}

TEST(Avx2Equivalence, SquaredMagnitudes) {
  if (!have_avx2()) GTEST_SKIP() << "CPU lacks AVX2/FMA";
  std::mt19937_64 rng(4);
  for (std::size_t n = 0; n <= 17; ++n) {
    const auto v = random_complex(rng, n);
    std::vector<double> s(n), w(n);
    scalar::squared_magnitudes(v, s);
    avx2::squared_magnitudes(v, w);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(s[i], w[i], 1e-14 * (1.0 + s[i]));
  }
}

TEST(Avx2Equivalence, Permanent) {
  if (!have_avx2()) GTEST_SKIP() << "CPU lacks AVX2/FMA";
  std::mt19937_64 rng(5);
  for (std::size_t n = 0; n <= 10; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_complex(rng, n * n);
      const Complex s = scalar::permanent(a, n);
      const Complex v = avx2::permanent(a, n);
      EXPECT_NEAR(std::abs(s - v), 0.0, 1e-10 * std::max(1.0, std::abs(s))) << "n=" << n;
    }
  }
}

TEST(Avx2Equivalence, DispatchedTableMatchesScalar) {
  if (!have_avx2()) GTEST_SKIP() << "CPU lacks AVX2/FMA";
  force_isa(Isa::kAvx2);
  EXPECT_EQ(kernels().isa, Isa::kAvx2);
  std::mt19937_64 rng(6);
  const auto a = random_complex(rng, 16);
  EXPECT_NEAR(std::abs(kernels().permanent(a, 4) - scalar::permanent(a, 4)), 0.0, 1e-12);
  reset_isa();
}

#endif

}  // namespace
}  // namespace multiport::kernels
