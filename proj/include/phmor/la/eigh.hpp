// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "phmor/la/mat.hpp"

namespace phmor::la {

/// Eigendecomposition of a Hermitian matrix: a = v diag(w) v^H with unitary v
/// and real eigenvalues in ascending order.
struct Eigh {
  std::vector<double> w;
  Mat v;
};

/// Cyclic complex Jacobi iteration. The input is symmetrized first, so
/// roundoff-level departures from Hermitian symmetry are tolerated.
Eigh eigh(const Mat &a);

/// Extremal eigenvalues of the Hermitian part; convenience for definiteness
/// checks.
double min_eig_hermitian(const Mat &a);
double max_abs_eig_hermitian(const Mat &a);

}  // namespace phmor::la
