// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/la/lu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phmor::la {

namespace {

double abs1(cd z) { return std::abs(z.real()) + std::abs(z.imag()); }

double norm1(const Mat &a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      s += std::abs(a(i, j));
    }
    best = std::max(best, s);
  }
  return best;
}

double vec_norm1(const Vec &x) {
  double s = 0.0;
  for (const cd &v : x) {
    s += std::abs(v);
  }
  return s;
}

// Hager-Higham estimate of norm1(inv(A)) from the factorization.
double inv_norm1_est(const Lu &lu) {
  const std::size_t n = lu.dim();
  Vec x(n, cd(1.0 / static_cast<double>(n)));
  double est = 0.0;
  std::size_t last_j = n;
  for (int iter = 0; iter < 5; ++iter) {
    Vec v = lu.solve(x);
    double gamma = vec_norm1(v);
    if (gamma <= est && iter > 0) {
      break;
    }
    est = gamma;
    Vec xi(n);
    for (std::size_t i = 0; i < n; ++i) {
      double m = std::abs(v[i]);
      xi[i] = m > 0.0 ? v[i] / m : cd(1.0);
    }
    Vec z = lu.solve_adjoint(xi);
    std::size_t j = 0;
    double zmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double m = std::abs(z[i]);
      if (m > zmax) {
        zmax = m;
        j = i;
      }
    }
    if (j == last_j) {
      break;
    }
    last_j = j;
    std::fill(x.begin(), x.end(), cd(0.0));
    x[j] = 1.0;
  }
  return est;
}

}  // namespace

Lu lu_factor(const Mat &a) {
  require(a.square(), "lu_factor: square matrix required");
  const std::size_t n = a.rows();
  Lu lu;
  lu.f = a;
  lu.piv.assign(n, 0);
  const double anorm = norm1(a);
  Mat &f = lu.f;
  const Kernels &k = active_kernels();
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t p = t;
    double best = abs1(f(t, t));
    for (std::size_t i = t + 1; i < n; ++i) {
      double m = abs1(f(i, t));
      if (m > best) {
        best = m;
        p = i;
      }
    }
    lu.piv[t] = static_cast<int>(p);
    if (p != t) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(f(t, j), f(p, j));
      }
    }
    cd pivot = f(t, t);
    if (pivot == cd(0.0)) {
      lu.singular = true;
      continue;
    }
    cd inv_p = cd(1.0) / pivot;
    k.scal(n - t - 1, inv_p, f.col(t) + t + 1);
    for (std::size_t j = t + 1; j < n; ++j) {
      cd m = f(t, j);
      if (m != cd(0.0)) {
        k.axpy(n - t - 1, -m, f.col(t) + t + 1, f.col(j) + t + 1);
      }
    }
  }
  if (!lu.singular && n > 0) {
    double inv_norm = inv_norm1_est(lu);
    lu.rcond = (anorm > 0.0 && inv_norm > 0.0) ? 1.0 / (anorm * inv_norm) : 0.0;
  }
  return lu;
}

Vec Lu::solve(Vec b) const {
  const std::size_t n = dim();
  require(b.size() == n, "Lu::solve: size mismatch");
  if (singular) {
    throw std::domain_error("Lu::solve: matrix is singular");
  }
  const Kernels &k = active_kernels();
  for (std::size_t t = 0; t < n; ++t) {
    std::swap(b[t], b[static_cast<std::size_t>(piv[t])]);
  }
  // L y = b (unit lower)
  for (std::size_t t = 0; t < n; ++t) {
    if (b[t] != cd(0.0)) {
      k.axpy(n - t - 1, -b[t], f.col(t) + t + 1, b.data() + t + 1);
    }
  }
  // U x = y
  for (std::size_t t = n; t-- > 0;) {
    b[t] /= f(t, t);
    if (b[t] != cd(0.0)) {
      k.axpy(t, -b[t], f.col(t), b.data());
    }
  }
  return b;
}

Vec Lu::solve_adjoint(Vec b) const {
  const std::size_t n = dim();
  require(b.size() == n, "Lu::solve_adjoint: size mismatch");
  if (singular) {
    throw std::domain_error("Lu::solve_adjoint: matrix is singular");
  }
  const Kernels &k = active_kernels();
  // A = P^T L U, so A^H x = b reads U^H L^H P x = b.
  // U^H y = b: U^H is lower triangular with diagonal conj(U_tt).
  for (std::size_t t = 0; t < n; ++t) {
    cd s = k.dotc(t, f.col(t), b.data());
    b[t] = (b[t] - s) / std::conj(f(t, t));
  }
  // L^H z = y: L^H is unit upper triangular.
  for (std::size_t t = n; t-- > 0;) {
    cd s = k.dotc(n - t - 1, f.col(t) + t + 1, b.data() + t + 1);
    b[t] -= s;
  }
  // x = P^T z: undo row swaps in reverse order.
  for (std::size_t t = n; t-- > 0;) {
    std::swap(b[t], b[static_cast<std::size_t>(piv[t])]);
  }
  return b;
}

Mat Lu::solve(const Mat &b) const {
  require(b.rows() == dim(), "Lu::solve: shape mismatch");
  Mat x(b.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    x.set_col(j, solve(b.col_vec(j)));
  }
  return x;
}

Mat inverse(const Mat &a) {
  Lu lu = lu_factor(a);
  if (lu.singular) {
    throw std::domain_error("inverse: matrix is singular");
  }
  return lu.solve(Mat::identity(a.rows()));
}

}  // namespace phmor::la
