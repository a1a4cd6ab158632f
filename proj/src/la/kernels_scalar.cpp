// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/la/kernels.hpp"

namespace phmor::la {

namespace {

void axpy_scalar(std::size_t n, cd a, const cd *x, cd *y) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void scal_scalar(std::size_t n, cd a, cd *x) {
  for (std::size_t i = 0; i < n; ++i) {
    x[i] *= a;
  }
}

cd dotc_scalar(std::size_t n, const cd *x, const cd *y) {
  cd s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += std::conj(x[i]) * y[i];
  }
  return s;
}

cd dotu_scalar(std::size_t n, const cd *x, const cd *y) {
  cd s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i] * y[i];
  }
  return s;
}

double abs2sum_scalar(std::size_t n, const cd *x) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

}  // namespace

const Kernels &scalar_kernels() {
  static const Kernels table{"scalar",     axpy_scalar, scal_scalar,
                             dotc_scalar,  dotu_scalar, abs2sum_scalar};
  return table;
}

}  // namespace phmor::la
