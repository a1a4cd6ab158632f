// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be entered after a runtime CPU check
// (see kernels.cpp).

#include "phmor/la/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace phmor::la {

namespace {

// Two interleaved complex<double> per 256-bit lane. For a complex product
// u*v the even (real) slots take ur*vr - ui*vi and the odd slots take
// ur*vi + ui*vr, which _mm256_fmaddsub_pd produces in one step.

inline __m256d cmul(__m256d ur_dup, __m256d ui_dup, __m256d v) {
  __m256d v_swap = _mm256_permute_pd(v, 0x5);
  return _mm256_fmaddsub_pd(ur_dup, v, _mm256_mul_pd(ui_dup, v_swap));
}

void axpy_avx2(std::size_t n, cd a, const cd *x, cd *y) {
  const double *xp = reinterpret_cast<const double *>(x);
  double *yp = reinterpret_cast<double *>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    yv = _mm256_add_pd(yv, cmul(ar, ai, xv));
    _mm256_storeu_pd(yp + 2 * i, yv);
  }
  for (; i < n; ++i) {
    y[i] += a * x[i];
  }
}

void scal_avx2(std::size_t n, cd a, cd *x) {
  double *xp = reinterpret_cast<double *>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    _mm256_storeu_pd(xp + 2 * i, cmul(ar, ai, xv));
  }
  for (; i < n; ++i) {
    x[i] *= a;
  }
}

inline cd reduce_c(__m256d acc) {
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double buf[2];
  _mm_store_pd(buf, s);
  return cd(buf[0], buf[1]);
}

cd dotc_avx2(std::size_t n, const cd *x, const cd *y) {
  const double *xp = reinterpret_cast<const double *>(x);
  const double *yp = reinterpret_cast<const double *>(y);
  const __m256d conj_mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_xor_pd(_mm256_loadu_pd(xp + 2 * i), conj_mask);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d xr = _mm256_movedup_pd(xv);
    __m256d xi = _mm256_permute_pd(xv, 0xF);
    acc = _mm256_add_pd(acc, cmul(xr, xi, yv));
  }
  cd s = reduce_c(acc);
  for (; i < n; ++i) {
    s += std::conj(x[i]) * y[i];
  }
  return s;
}

cd dotu_avx2(std::size_t n, const cd *x, const cd *y) {
  const double *xp = reinterpret_cast<const double *>(x);
  const double *yp = reinterpret_cast<const double *>(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d xr = _mm256_movedup_pd(xv);
    __m256d xi = _mm256_permute_pd(xv, 0xF);
    acc = _mm256_add_pd(acc, cmul(xr, xi, yv));
  }
  cd s = reduce_c(acc);
  for (; i < n; ++i) {
    s += x[i] * y[i];
  }
  return s;
}

double abs2sum_avx2(std::size_t n, const cd *x) {
  const double *xp = reinterpret_cast<const double *>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double buf[4];
  _mm256_store_pd(buf, acc);
  double s = buf[0] + buf[1] + buf[2] + buf[3];
  for (; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

}  // namespace

const Kernels *avx2_kernels_impl() {
  static const Kernels table{"avx2",    axpy_avx2, scal_avx2,
                             dotc_avx2, dotu_avx2, abs2sum_avx2};
  return &table;
}

}  // namespace phmor::la

#else

namespace phmor::la {
const Kernels *avx2_kernels_impl() { return nullptr; }
}  // namespace phmor::la

#endif
