// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/la/svd.hpp"

#include <algorithm>
#include <cmath>

#include "phmor/la/rotation.hpp"

namespace phmor::la {

std::vector<double> singular_values(Mat a) {
  if (a.rows() < a.cols()) {
    a = a.adjoint();
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const Kernels &k = active_kernels();

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = k.abs2sum(m, a.col(p));
        double aqq = k.abs2sum(m, a.col(q));
        cd apq = k.dotc(m, a.col(p), a.col(q));
        double ag = std::abs(apq);
        if (app == 0.0 || aqq == 0.0 ||
            ag <= 1e-15 * std::sqrt(app * aqq)) {
          continue;
        }
        converged = false;
        HermRotation rot = herm_rotation(app, aqq, apq);
        // B <- B U orthogonalizes the column pair: U^H (B^H B) U is diagonal.
        Vec tmp(a.col(p), a.col(p) + m);
        k.scal(m, rot.upp, a.col(p));
        k.axpy(m, rot.uqp, a.col(q), a.col(p));
        k.scal(m, rot.uqq, a.col(q));
        k.axpy(m, rot.upq, tmp.data(), a.col(q));
      }
    }
    if (converged) {
      break;
    }
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    sigma[j] = std::sqrt(k.abs2sum(m, a.col(j)));
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

std::size_t numerical_rank(const Mat &a, double rel_tol) {
  std::vector<double> sigma = singular_values(a);
  if (sigma.empty() || sigma.front() == 0.0) {
    return 0;
  }
  double gate = rel_tol * sigma.front();
  std::size_t r = 0;
  for (double s : sigma) {
    if (s > gate) {
      ++r;
    }
  }
  return r;
}

}  // namespace phmor::la
