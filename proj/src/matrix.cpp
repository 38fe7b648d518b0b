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

#include "multiport/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "multiport/kernels.hpp"

namespace multiport {

const char* to_string(MatrixRole role) {
  switch (role) {
    case MatrixRole::kGeneral: return "general";
    case MatrixRole::kDft: return "dft";
    case MatrixRole::kPhaseDiagonal: return "phase-diagonal";
    case MatrixRole::kInterferometer: return "interferometer";
    case MatrixRole::kTransfer: return "transfer";
  }
  return "unknown";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, MatrixRole role)
    : rows_(rows), cols_(cols), role_(role), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Complex> Matrix::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Complex> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_, role_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, role_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

double Matrix::unitarity_defect() const {
  if (rows_ != cols_) return INFINITY;
  const Matrix product = (*this) * adjoint();
  return frobenius_distance(product, identity(rows_));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix product shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Complex> apply(const Matrix& m, std::span<const Complex> x) {
  if (x.size() != m.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix-vector shape mismatch");
  }
  std::vector<Complex> y(m.rows());
  kernels::kernels().matvec(m.data(), m.rows(), m.cols(), x, y);
  return y;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) sum += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(sum);
}

}  // namespace multiport
