// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/la/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace phmor::la {

#if defined(PHMOR_HAVE_AVX2)
const Kernels *avx2_kernels_impl();
#endif

const Kernels *avx2_kernels() {
#if defined(PHMOR_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return avx2_kernels_impl();
  }
#endif
  return nullptr;
}

const Kernels &active_kernels() {
  static const Kernels *selected = [] {
    const char *env = std::getenv("PHMOR_KERNELS");
    std::string_view want = env != nullptr ? env : "auto";
    const Kernels *simd = avx2_kernels();
    if (want == "scalar") {
      return &scalar_kernels();
    }
    if (simd != nullptr) {
      return simd;
    }
    return &scalar_kernels();
  }();
  return *selected;
}

}  // namespace phmor::la
