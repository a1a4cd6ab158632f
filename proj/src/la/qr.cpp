// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/la/qr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace phmor::la {

Qr qr_factor(Mat a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t steps = std::min(m, n);
  const Kernels &kr = active_kernels();

  Qr out;
  out.jpvt.resize(n);
  std::iota(out.jpvt.begin(), out.jpvt.end(), std::size_t{0});

  for (std::size_t k = 0; k < steps; ++k) {
    // Pivot on the largest remaining partial column norm, recomputed exactly
    // (cheap at this scale and immune to downdating drift).
    std::size_t best = k;
    double best_norm = kr.abs2sum(m - k, a.col(k) + k);
    for (std::size_t j = k + 1; j < n; ++j) {
      double nj = kr.abs2sum(m - k, a.col(j) + k);
      if (nj > best_norm) {
        best_norm = nj;
        best = j;
      }
    }
    if (best != k) {
      for (std::size_t i = 0; i < m; ++i) {
        std::swap(a(i, k), a(i, best));
      }
      std::swap(out.jpvt[k], out.jpvt[best]);
    }
    double normx = std::sqrt(best_norm);
    if (normx == 0.0) {
      out.reflectors.emplace_back();
      out.betas.push_back(0.0);
      continue;
    }
    cd alpha = a(k, k);
    double aa = std::abs(alpha);
    cd phase = aa > 0.0 ? alpha / aa : cd(1.0);
    // v = x + phase * |x| e1 maps x to -phase * |x| e1 without cancellation.
    Vec v(a.col(k) + k, a.col(k) + m);
    v[0] = alpha + phase * normx;
    double beta = 2.0 / kr.abs2sum(v.size(), v.data());
    for (std::size_t j = k; j < n; ++j) {
      cd proj = beta * kr.dotc(v.size(), v.data(), a.col(j) + k);
      kr.axpy(v.size(), -proj, v.data(), a.col(j) + k);
    }
    a(k, k) = -phase * normx;  // exact by construction
    for (std::size_t i = k + 1; i < m; ++i) {
      a(i, k) = 0.0;
    }
    out.reflectors.push_back(std::move(v));
    out.betas.push_back(beta);
  }
  out.r = std::move(a);
  return out;
}

std::size_t Qr::rank(double rel_tol) const {
  const std::size_t steps = std::min(rows(), cols());
  if (steps == 0) {
    return 0;
  }
  double r00 = std::abs(r(0, 0));
  if (r00 == 0.0) {
    return 0;
  }
  std::size_t count = 0;
  for (std::size_t j = 0; j < steps; ++j) {
    if (std::abs(r(j, j)) > rel_tol * r00) {
      ++count;
    }
  }
  return count;
}

double Qr::ls_residual(const Vec &b, std::size_t k) const {
  require(b.size() == rows(), "Qr::ls_residual: size mismatch");
  const Kernels &kr = active_kernels();
  Vec w = b;
  const std::size_t steps = std::min(k, reflectors.size());
  for (std::size_t t = 0; t < steps; ++t) {
    const Vec &v = reflectors[t];
    if (v.empty()) {
      continue;
    }
    cd proj = betas[t] * kr.dotc(v.size(), v.data(), w.data() + t);
    kr.axpy(v.size(), -proj, v.data(), w.data() + t);
  }
  return std::sqrt(kr.abs2sum(w.size() - steps, w.data() + steps));
}

}  // namespace phmor::la
