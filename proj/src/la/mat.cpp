// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/la/mat.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace phmor::la {

Mat::Mat(std::initializer_list<std::initializer_list<cd>> init) {
  rows_ = init.size();
  cols_ = rows_ > 0 ? init.begin()->size() : 0;
  data_.assign(rows_ * cols_, cd(0.0));
  std::size_t i = 0;
  for (const auto &row : init) {
    require(row.size() == cols_, "Mat: ragged initializer list");
    std::size_t j = 0;
    for (const cd &v : row) {
      (*this)(i, j) = v;
      ++j;
    }
    ++i;
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

Mat Mat::adjoint() const {
  Mat m(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      m(j, i) = std::conj((*this)(i, j));
    }
  }
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      m(j, i) = (*this)(i, j);
    }
  }
  return m;
}

Mat Mat::conj() const {
  Mat m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    m.data_[k] = std::conj(data_[k]);
  }
  return m;
}

Mat Mat::block(std::size_t i0, std::size_t j0, std::size_t r,
               std::size_t c) const {
  require(i0 + r <= rows_ && j0 + c <= cols_, "Mat::block: out of range");
  Mat m(r, c);
  for (std::size_t j = 0; j < c; ++j) {
    std::memcpy(m.col(j), col(j0 + j) + i0, r * sizeof(cd));
  }
  return m;
}

void Mat::set_block(std::size_t i0, std::size_t j0, const Mat &b) {
  require(i0 + b.rows() <= rows_ && j0 + b.cols() <= cols_,
          "Mat::set_block: out of range");
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::memcpy(col(j0 + j) + i0, b.col(j), b.rows() * sizeof(cd));
  }
}

Vec Mat::col_vec(std::size_t j) const {
  return Vec(col(j), col(j) + rows_);
}

void Mat::set_col(std::size_t j, const Vec &v) {
  require(v.size() == rows_, "Mat::set_col: size mismatch");
  std::memcpy(col(j), v.data(), rows_ * sizeof(cd));
}

Mat &Mat::operator+=(const Mat &rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "Mat+=: shape mismatch");
  active_kernels().axpy(data_.size(), cd(1.0), rhs.data(), data());
  return *this;
}

Mat &Mat::operator-=(const Mat &rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "Mat-=: shape mismatch");
  active_kernels().axpy(data_.size(), cd(-1.0), rhs.data(), data());
  return *this;
}

Mat &Mat::operator*=(cd a) {
  active_kernels().scal(data_.size(), a, data());
  return *this;
}

Mat Mat::operator-() const {
  Mat m = *this;
  m *= cd(-1.0);
  return m;
}

Mat operator+(Mat a, const Mat &b) {
  a += b;
  return a;
}

Mat operator-(Mat a, const Mat &b) {
  a -= b;
  return a;
}

Mat operator*(cd a, Mat m) {
  m *= a;
  return m;
}

Mat operator*(const Mat &a, const Mat &b) { return matmul(a, b); }

Vec operator*(const Mat &a, const Vec &x) { return matvec(a, x); }

Mat matmul(const Mat &a, const Mat &b) {
  require(a.cols() == b.rows(), "matmul: shape mismatch");
  Mat c(a.rows(), b.cols());
  const Kernels &k = active_kernels();
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      cd s = b(t, j);
      if (s != cd(0.0)) {
        k.axpy(a.rows(), s, a.col(t), c.col(j));
      }
    }
  }
  return c;
}

Mat adj_mul(const Mat &a, const Mat &b) {
  require(a.rows() == b.rows(), "adj_mul: shape mismatch");
  Mat c(a.cols(), b.cols());
  const Kernels &k = active_kernels();
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      c(i, j) = k.dotc(a.rows(), a.col(i), b.col(j));
    }
  }
  return c;
}

Mat mul_adj(const Mat &a, const Mat &b) {
  require(a.cols() == b.cols(), "mul_adj: shape mismatch");
  Mat c(a.rows(), b.rows());
  const Kernels &k = active_kernels();
  for (std::size_t j = 0; j < b.rows(); ++j) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      cd s = std::conj(b(j, t));
      if (s != cd(0.0)) {
        k.axpy(a.rows(), s, a.col(t), c.col(j));
      }
    }
  }
  return c;
}

Vec matvec(const Mat &a, const Vec &x) {
  require(a.cols() == x.size(), "matvec: shape mismatch");
  Vec y(a.rows(), cd(0.0));
  const Kernels &k = active_kernels();
  for (std::size_t t = 0; t < a.cols(); ++t) {
    if (x[t] != cd(0.0)) {
      k.axpy(a.rows(), x[t], a.col(t), y.data());
    }
  }
  return y;
}

Vec adj_matvec(const Mat &a, const Vec &x) {
  require(a.rows() == x.size(), "adj_matvec: shape mismatch");
  Vec y(a.cols());
  const Kernels &k = active_kernels();
  for (std::size_t i = 0; i < a.cols(); ++i) {
    y[i] = k.dotc(a.rows(), a.col(i), x.data());
  }
  return y;
}

Mat hermitian_part(const Mat &a) {
  require(a.square(), "hermitian_part: square required");
  Mat h = a + a.adjoint();
  h *= cd(0.5);
  return h;
}

Mat skew_part(const Mat &a) {
  require(a.square(), "skew_part: square required");
  Mat s = a - a.adjoint();
  s *= cd(0.5);
  return s;
}

Mat blkdiag(const Mat &a, const Mat &b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

double fro_norm(const Mat &a) {
  return std::sqrt(active_kernels().abs2sum(a.size(), a.data()));
}

double norm2_est(const Mat &a) {
  if (a.empty()) {
    return 0.0;
  }
  double f = fro_norm(a);
  if (f == 0.0) {
    return 0.0;
  }
  // Power iteration on a^H a; deterministic ramped start avoids start vectors
  // orthogonal to the dominant singular direction.
  Vec x(a.cols());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = cd(1.0 + 1e-3 * static_cast<double>(j % 17));
  }
  double nx = vec_norm(x);
  for (auto &v : x) {
    v /= nx;
  }
  double est = 0.0;
  for (int it = 0; it < 100; ++it) {
    Vec ax = matvec(a, x);
    double e = vec_norm(ax);
    if (e == 0.0) {
      break;
    }
    Vec z = adj_matvec(a, ax);
    double nz = vec_norm(z);
    if (nz == 0.0) {
      est = e;
      break;
    }
    for (auto &v : z) {
      v /= nz;
    }
    x = std::move(z);
    if (std::abs(e - est) <= 1e-8 * e) {
      est = e;
      break;
    }
    est = e;
  }
  // sigma_max >= fro / sqrt(min(m,n)) always holds; guards slow convergence.
  double lower = f / std::sqrt(static_cast<double>(std::min(a.rows(), a.cols())));
  return std::max(est, lower);
}

double vec_norm(const Vec &x) {
  return std::sqrt(active_kernels().abs2sum(x.size(), x.data()));
}

cd vec_dotc(const Vec &x, const Vec &y) {
  require(x.size() == y.size(), "vec_dotc: size mismatch");
  return active_kernels().dotc(x.size(), x.data(), y.data());
}

Vec vec_scale(cd a, Vec x) {
  active_kernels().scal(x.size(), a, x.data());
  return x;
}

Vec vec_add(Vec x, const Vec &y) {
  require(x.size() == y.size(), "vec_add: size mismatch");
  active_kernels().axpy(x.size(), cd(1.0), y.data(), x.data());
  return x;
}

Vec vec_sub(Vec x, const Vec &y) {
  require(x.size() == y.size(), "vec_sub: size mismatch");
  active_kernels().axpy(x.size(), cd(-1.0), y.data(), x.data());
  return x;
}

}  // namespace phmor::la
