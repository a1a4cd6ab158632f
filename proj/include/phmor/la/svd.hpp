// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "phmor/la/mat.hpp"

namespace phmor::la {

/// Singular values by one-sided Jacobi, descending.
std::vector<double> singular_values(Mat a);

/// Numerical rank with singular values below rel_tol * sigma_max treated as
/// zero.
std::size_t numerical_rank(const Mat &a, double rel_tol);

}  // namespace phmor::la
