// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "phmor/la/mat.hpp"

namespace phmor::la {

/// Column-pivoted Householder QR: A P = Q R.
struct Qr {
  Mat r;                         // upper-triangular factor (m x n)
  std::vector<Vec> reflectors;   // Householder vectors, length m - k at step k
  std::vector<double> betas;     // 2 / |v|^2 per reflector
  std::vector<std::size_t> jpvt; // jpvt[j] = original index of pivoted column j

  std::size_t rows() const { return r.rows(); }
  std::size_t cols() const { return r.cols(); }

  /// Count of diagonal entries with |r_jj| > rel_tol * |r_00|.
  std::size_t rank(double rel_tol) const;

  /// Residual norm min_x ||A_k x - b|| over the span of the leading k pivoted
  /// columns (k defaults to full rank of the factorization).
  double ls_residual(const Vec &b, std::size_t k) const;
};

Qr qr_factor(Mat a);

}  // namespace phmor::la
