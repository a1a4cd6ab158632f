// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "phmor/la/mat.hpp"

namespace phmor::la {

/// Partial-pivoting LU factorization P·A = L·U with a Hager–Higham 1-norm
/// reciprocal condition estimate.
struct Lu {
  Mat f;                  // L (unit lower) and U packed together
  std::vector<int> piv;   // row swapped with k at elimination step k
  double rcond = 0.0;     // 1 / (norm1(A) * est(norm1(inv(A)))); 0 if singular
  bool singular = false;  // exact zero pivot encountered

  std::size_t dim() const { return f.rows(); }

  Vec solve(Vec b) const;          // A x = b
  Vec solve_adjoint(Vec b) const;  // A^H x = b
  Mat solve(const Mat &b) const;
};

Lu lu_factor(const Mat &a);

/// Dense inverse via LU; callers are expected to have checked rcond.
Mat inverse(const Mat &a);

}  // namespace phmor::la
