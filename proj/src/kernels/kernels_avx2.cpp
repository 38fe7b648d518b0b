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

// Compiled with -mavx2 -mfma. Only reached through the dispatcher after a
// CPUID check, so nothing in here may be called unconditionally.

#include <immintrin.h>

#include <cstdint>
#include <vector>

#include "multiport/kernels.hpp"

namespace multiport::kernels::avx2 {

namespace {

// std::complex<double> is layout-compatible with double[2], so one __m256d
// holds two interleaved complex values (re0, im0, re1, im1).
inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// Lane-wise complex product of two packed pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

// Sum of the two packed complex values.
inline Complex hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return Complex(out[0], out[1]);
}

// Product of the two packed complex values.
inline Complex hprod(__m256d v) {
  alignas(32) double out[4];
  _mm256_store_pd(out, v);
  return Complex(out[0], out[1]) * Complex(out[2], out[3]);
}

}  // namespace

void matvec(std::span<const Complex> matrix, std::size_t rows, std::size_t cols,
            std::span<const Complex> x, std::span<Complex> y) {
  const double* xd = as_doubles(x.data());
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = as_doubles(matrix.data() + r * cols);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= cols; k += 2) {
      const __m256d a = _mm256_loadu_pd(row + 2 * k);
      const __m256d b = _mm256_loadu_pd(xd + 2 * k);
      acc = _mm256_add_pd(acc, cmul(a, b));
    }
    Complex total = hsum(acc);
    for (; k < cols; ++k) total += matrix[r * cols + k] * x[k];
    y[r] = total;
  }
}

void squared_magnitudes(std::span<const Complex> in, std::span<double> out) {
  const double* src = as_doubles(in.data());
  std::size_t i = 0;
  // Four complex values per iteration: square, then add adjacent pairs.
  for (; i + 4 <= in.size(); i += 4) {
    const __m256d a = _mm256_loadu_pd(src + 2 * i);
    const __m256d b = _mm256_loadu_pd(src + 2 * i + 4);
    const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    // hadd interleaves 128-bit halves: (a0, b0, a1, b1) -> (a0, a1, b0, b1).
    _mm256_storeu_pd(out.data() + i, _mm256_permute4x64_pd(h, 0xD8));
  }
  for (; i < in.size(); ++i) out[i] = std::norm(in[i]);
}

Complex permanent(std::span<const Complex> matrix, std::size_t n) {
  if (n == 0) return Complex(1.0, 0.0);
  if (n == 1) return matrix[0];

  // Column sums padded to an even count with a multiplicative identity so the
  // product loop always consumes full pairs.
  const std::size_t padded = n + (n & 1);
  std::vector<Complex> sums(padded, Complex(1.0, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += matrix[i * n + j];
    sums[j] = s;
  }
  double* sd = as_doubles(sums.data());
  const std::size_t pairs = n / 2;

  auto product = [&] {
    __m256d p = _mm256_loadu_pd(sd);
    for (std::size_t q = 1; q < padded / 2; ++q) p = cmul(p, _mm256_loadu_pd(sd + 4 * q));
    return hprod(p);
  };

  Complex total = product();
  std::vector<int> delta(n, 1);
  int parity = 1;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t g = 1; g < steps; ++g) {
    const std::size_t i = 1 + static_cast<std::size_t>(__builtin_ctzll(g));
    delta[i] = -delta[i];
    parity = -parity;
    const __m256d scale = _mm256_set1_pd(2.0 * delta[i]);
    const double* row = as_doubles(matrix.data() + i * n);
    for (std::size_t q = 0; q < pairs; ++q) {
      const __m256d s = _mm256_loadu_pd(sd + 4 * q);
      _mm256_storeu_pd(sd + 4 * q, _mm256_fmadd_pd(scale, _mm256_loadu_pd(row + 4 * q), s));
    }
    if (n & 1) sums[n - 1] += (2.0 * delta[i]) * matrix[i * n + n - 1];
    const Complex p = product();
    total += parity > 0 ? p : -p;
  }
  return total / static_cast<double>(steps);
}

}  // namespace multiport::kernels::avx2
