// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "phmor/la/kernels.hpp"

namespace phmor::la {

using Vec = std::vector<cd>;

/// Dense complex matrix, column-major storage.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Row-major initializer list, e.g. Mat{{1, 2}, {3, 4}}.
  Mat(std::initializer_list<std::initializer_list<cd>> init);

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool square() const { return rows_ == cols_; }

  cd &operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  const cd &operator()(std::size_t i, std::size_t j) const {
    return data_[j * rows_ + i];
  }

  cd *col(std::size_t j) { return data_.data() + j * rows_; }
  const cd *col(std::size_t j) const { return data_.data() + j * rows_; }
  cd *data() { return data_.data(); }
  const cd *data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  Mat adjoint() const;
  Mat transpose() const;
  Mat conj() const;

  Mat block(std::size_t i0, std::size_t j0, std::size_t r,
            std::size_t c) const;
  void set_block(std::size_t i0, std::size_t j0, const Mat &b);

  Vec col_vec(std::size_t j) const;
  void set_col(std::size_t j, const Vec &v);

  Mat &operator+=(const Mat &rhs);
  Mat &operator-=(const Mat &rhs);
  Mat &operator*=(cd a);
  Mat operator-() const;

  friend bool operator==(const Mat &a, const Mat &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cd> data_;
};

Mat operator+(Mat a, const Mat &b);
Mat operator-(Mat a, const Mat &b);
Mat operator*(cd a, Mat m);
Mat operator*(const Mat &a, const Mat &b);
Vec operator*(const Mat &a, const Vec &x);

/// a * b
Mat matmul(const Mat &a, const Mat &b);
/// a^H * b
Mat adj_mul(const Mat &a, const Mat &b);
/// a * b^H
Mat mul_adj(const Mat &a, const Mat &b);
Vec matvec(const Mat &a, const Vec &x);
Vec adj_matvec(const Mat &a, const Vec &x);

/// (a + a^H) / 2
Mat hermitian_part(const Mat &a);
/// (a - a^H) / 2
Mat skew_part(const Mat &a);

Mat blkdiag(const Mat &a, const Mat &b);

double fro_norm(const Mat &a);
/// Spectral norm by power iteration on a^H a; exact enough for tolerance
/// scaling (relative accuracy ~1e-8 on generic matrices).
double norm2_est(const Mat &a);

double vec_norm(const Vec &x);
cd vec_dotc(const Vec &x, const Vec &y);
Vec vec_scale(cd a, Vec x);
Vec vec_add(Vec x, const Vec &y);
Vec vec_sub(Vec x, const Vec &y);

inline void require(bool cond, const char *what) {
  if (!cond) {
    throw std::invalid_argument(what);
  }
}

}  // namespace phmor::la
