// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/la/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "phmor/la/rotation.hpp"

namespace phmor::la {

namespace {

double off_norm(const Mat &a) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != j) {
        s += std::norm(a(i, j));
      }
    }
  }
  return std::sqrt(s);
}

}  // namespace

Eigh eigh(const Mat &a_in) {
  require(a_in.square(), "eigh: square matrix required");
  const std::size_t n = a_in.rows();
  Mat a = hermitian_part(a_in);
  Mat v = Mat::identity(n);
  const double gate = 2.3e-16 * std::max(fro_norm(a), 1e-300);

  for (int sweep = 0; sweep < 60; ++sweep) {
    if (off_norm(a) <= gate) {
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cd gamma = a(p, q);
        double ag = std::abs(gamma);
        if (ag <= 1e-3 * gate) {
          continue;
        }
        HermRotation rot = herm_rotation(a(p, p).real(), a(q, q).real(), gamma);
        // Columns: A <- A U, V <- V U.
        for (std::size_t i = 0; i < n; ++i) {
          cd ap = a(i, p), aq = a(i, q);
          a(i, p) = rot.upp * ap + rot.uqp * aq;
          a(i, q) = rot.upq * ap + rot.uqq * aq;
          cd vp = v(i, p), vq = v(i, q);
          v(i, p) = rot.upp * vp + rot.uqp * vq;
          v(i, q) = rot.upq * vp + rot.uqq * vq;
        }
        // Rows: A <- U^H A.
        for (std::size_t j = 0; j < n; ++j) {
          cd ap = a(p, j), aq = a(q, j);
          a(p, j) = std::conj(rot.upp) * ap + std::conj(rot.uqp) * aq;
          a(q, j) = std::conj(rot.upq) * ap + std::conj(rot.uqq) * aq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cd(rot.alpha_new);
        a(q, q) = cd(rot.beta_new);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  Eigh out;
  out.w.resize(n);
  out.v = Mat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.w[j] = a(order[j], order[j]).real();
    out.v.set_col(j, v.col_vec(order[j]));
  }
  return out;
}

double min_eig_hermitian(const Mat &a) {
  Eigh e = eigh(a);
  return e.w.empty() ? 0.0 : e.w.front();
}

double max_abs_eig_hermitian(const Mat &a) {
  Eigh e = eigh(a);
  if (e.w.empty()) {
    return 0.0;
  }
  return std::max(std::abs(e.w.front()), std::abs(e.w.back()));
}

}  // namespace phmor::la
