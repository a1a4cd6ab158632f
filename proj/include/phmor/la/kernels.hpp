// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>

namespace phmor::la {

using cd = std::complex<double>;

// Inner-loop kernels over contiguous complex<double> arrays. The scalar table
// defines the reference semantics; SIMD variants may reassociate sums and must
// agree with the scalar table to roundoff (enforced by the equivalence tests).
struct Kernels {
  const char *name;
  // y[i] += a * x[i]
  void (*axpy)(std::size_t n, cd a, const cd *x, cd *y);
  // x[i] *= a
  void (*scal)(std::size_t n, cd a, cd *x);
  // sum_i conj(x[i]) * y[i]
  cd (*dotc)(std::size_t n, const cd *x, const cd *y);
  // sum_i x[i] * y[i]
  cd (*dotu)(std::size_t n, const cd *x, const cd *y);
  // sum_i |x[i]|^2
  double (*abs2sum)(std::size_t n, const cd *x);
};

// Reference implementation; always available.
const Kernels &scalar_kernels();

// AVX2+FMA implementation, or nullptr when the build or the host CPU lacks
// support.
const Kernels *avx2_kernels();

// Table selected at startup: AVX2 when available, scalar otherwise. The
// environment variable PHMOR_KERNELS=scalar|avx2 forces a variant ("avx2"
// falls back to scalar when unsupported).
const Kernels &active_kernels();

}  // namespace phmor::la
