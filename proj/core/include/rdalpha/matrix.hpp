// Copyright 2026 The rdalpha Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RDALPHA_MATRIX_HPP
#define RDALPHA_MATRIX_HPP

#include <iosfwd>
#include <span>
#include <vector>

namespace rdalpha {

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, fill) {}

  static Matrix identity(int n);
  static Matrix diagonal(std::span<const double> d);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  double &operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  double max_abs() const;
  double frobenius_norm() const;
  double trace() const;
  std::vector<double> row_sums() const;
  Matrix transpose() const;

  /// Largest |a_ij - a_ji| <= tol * max(1, max_abs()).
  bool is_symmetric(double tol) const;

  std::vector<double> operator*(std::span<const double> x) const;
  Matrix operator*(const Matrix &rhs) const;
  Matrix operator*(double s) const;
  Matrix operator+(const Matrix &rhs) const;
  Matrix operator-(const Matrix &rhs) const;

  friend bool operator==(const Matrix &a, const Matrix &b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline Matrix operator*(double s, const Matrix &m) { return m * s; }

/// Largest |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const Matrix &a, const Matrix &b);

/// Plain-text dump: one row per line, entries separated by a single space,
/// each printed with 17 significant digits.
void dump_matrix(std::ostream &out, const Matrix &m);

}  // namespace rdalpha

#endif  // RDALPHA_MATRIX_HPP
