// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "phmor/la/kernels.hpp"

namespace phmor::la {

/// Unitary 2x2 rotation U diagonalizing the Hermitian block
/// [[alpha, gamma], [conj(gamma), beta]] (alpha, beta real) via U^H M U.
/// Shared by the Jacobi eigensolver and the one-sided Jacobi SVD.
struct HermRotation {
  cd upp, upq, uqp, uqq;
  double alpha_new, beta_new;
};

inline HermRotation herm_rotation(double alpha, double beta, cd gamma) {
  double ag = std::abs(gamma);
  cd phase = gamma / ag;
  double tau = (beta - alpha) / (2.0 * ag);
  double t;
  if (std::abs(tau) > 1e8) {
    t = 1.0 / (2.0 * tau);
  } else {
    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  double c = 1.0 / std::sqrt(1.0 + t * t);
  double s = t * c;
  HermRotation r;
  r.upp = phase * c;
  r.upq = -phase * s;
  r.uqp = cd(s);
  r.uqq = cd(c);
  r.alpha_new = alpha - t * ag;
  r.beta_new = beta + t * ag;
  return r;
}

}  // namespace phmor::la
