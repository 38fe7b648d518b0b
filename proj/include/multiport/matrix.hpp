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

#include <cstddef>
#include <span>
#include <vector>

#include "multiport/types.hpp"

namespace multiport {

enum class MatrixRole { kGeneral, kDft, kPhaseDiagonal, kInterferometer, kTransfer };

const char* to_string(MatrixRole role);

/// Dense row-major complex matrix. Sizes here are tiny (d <= 32), so there is
/// no blocking or sparse storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, MatrixRole role = MatrixRole::kGeneral);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  MatrixRole role() const noexcept { return role_; }
  void set_role(MatrixRole role) noexcept { role_ = role; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  std::vector<Complex> column(std::size_t c) const;
  std::vector<Complex> row(std::size_t r) const;

  Matrix adjoint() const;
  Matrix transpose() const;

  /// Frobenius norm of (M M^dagger - I).
  double unitarity_defect() const;
  bool is_unitary(double tolerance = 1e-10) const { return unitarity_defect() <= tolerance; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  MatrixRole role_ = MatrixRole::kGeneral;
  std::vector<Complex> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// y = M x through the active kernel variant.
std::vector<Complex> apply(const Matrix& m, std::span<const Complex> x);

/// Largest entrywise |a - b|.
double max_abs_difference(const Matrix& a, const Matrix& b);
double frobenius_distance(const Matrix& a, const Matrix& b);

}  // namespace multiport
