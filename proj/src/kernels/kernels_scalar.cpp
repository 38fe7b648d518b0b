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

#include <cstdint>
#include <vector>

#include "multiport/kernels.hpp"

namespace multiport::kernels::scalar {

void matvec(std::span<const Complex> matrix, std::size_t rows, std::size_t cols,
            std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const Complex* row = matrix.data() + r * cols;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < cols; ++k) {
      re += row[k].real() * x[k].real() - row[k].imag() * x[k].imag();
      im += row[k].real() * x[k].imag() + row[k].imag() * x[k].real();
    }
    y[r] = Complex(re, im);
  }
}

void squared_magnitudes(std::span<const Complex> in, std::span<double> out) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = in[i].real() * in[i].real() + in[i].imag() * in[i].imag();
  }
}

// Glynn's formula with delta vectors visited in Gray-code order, so each step
// flips one sign and updates the column sums with a single row.
//   perm(A) = 2^{1-n} sum_delta (prod_k delta_k) prod_j sum_i delta_i a_ij
// with delta_0 = +1 fixed.
Complex permanent(std::span<const Complex> matrix, std::size_t n) {
  if (n == 0) return Complex(1.0, 0.0);
  if (n == 1) return matrix[0];

  std::vector<Complex> sums(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += matrix[i * n + j];
    sums[j] = s;
  }

  auto product = [&] {
    Complex p = sums[0];
    for (std::size_t j = 1; j < n; ++j) p *= sums[j];
    return p;
  };

  Complex total = product();
  std::vector<int> delta(n, 1);
  int parity = 1;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t g = 1; g < steps; ++g) {
    // Row to flip: 1 + index of the lowest set bit of g.
    const std::size_t i = 1 + static_cast<std::size_t>(__builtin_ctzll(g));
    delta[i] = -delta[i];
    parity = -parity;
    const double scale = 2.0 * delta[i];
    const Complex* row = matrix.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) sums[j] += scale * row[j];
    const Complex p = product();
    total += parity > 0 ? p : -p;
  }
  return total / static_cast<double>(steps);
}

}  // namespace multiport::kernels::scalar
