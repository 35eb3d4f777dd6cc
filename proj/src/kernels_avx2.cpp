// Copyright (c) the gmxc Authors. All rights reserved.
//
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "gmx/kernels.hpp"

#if defined(GMX_BUILD_AVX2)

#include <immintrin.h>

namespace gmx {
namespace {

void AxpyF32(float* dst, const float* src, float a, int n) {
  const __m256 va = _mm256_set1_ps(a);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 d = _mm256_loadu_ps(dst + i);
    d = _mm256_fmadd_ps(va, _mm256_loadu_ps(src + i), d);
    _mm256_storeu_ps(dst + i, d);
  }
  for (; i < n; ++i) dst[i] += a * src[i];
}

void AxpyS2F32(float* dst, const float* src, float a, int n) {
  const __m256 va = _mm256_set1_ps(a);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    // Deinterleave the even elements of src[2i .. 2i+15].
    __m256 lo = _mm256_loadu_ps(src + 2 * i);
    __m256 hi = _mm256_loadu_ps(src + 2 * i + 8);
    __m256 even = _mm256_shuffle_ps(lo, hi, _MM_SHUFFLE(2, 0, 2, 0));
    even = _mm256_castpd_ps(
        _mm256_permute4x64_pd(_mm256_castps_pd(even), _MM_SHUFFLE(3, 1, 2, 0)));
    __m256 d = _mm256_loadu_ps(dst + i);
    d = _mm256_fmadd_ps(va, even, d);
    _mm256_storeu_ps(dst + i, d);
  }
  for (; i < n; ++i) dst[i] += a * src[2 * i];
}

void AxpyF64(double* dst, const double* src, double a, int n) {
  const __m256d va = _mm256_set1_pd(a);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_loadu_pd(dst + i);
    d = _mm256_fmadd_pd(va, _mm256_loadu_pd(src + i), d);
    _mm256_storeu_pd(dst + i, d);
  }
  for (; i < n; ++i) dst[i] += a * src[i];
}

float DotF32(const float* a, const float* b, int n) {
  __m256 acc = _mm256_setzero_ps();
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    acc = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc);
  }
  __m128 s = _mm_add_ps(_mm256_castps256_ps128(acc), _mm256_extractf128_ps(acc, 1));
  s = _mm_hadd_ps(s, s);
  s = _mm_hadd_ps(s, s);
  float out = _mm_cvtss_f32(s);
  for (; i < n; ++i) out += a[i] * b[i];
  return out;
}

void AddF32(float* dst, const float* src, int n) {
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 d = _mm256_add_ps(_mm256_loadu_ps(dst + i), _mm256_loadu_ps(src + i));
    _mm256_storeu_ps(dst + i, d);
  }
  for (; i < n; ++i) dst[i] += src[i];
}

void LeakyReluF32(float* x, float slope, int n) {
  const __m256 vs = _mm256_set1_ps(slope);
  const __m256 zero = _mm256_setzero_ps();
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 v = _mm256_loadu_ps(x + i);
    __m256 neg = _mm256_mul_ps(v, vs);
    __m256 mask = _mm256_cmp_ps(v, zero, _CMP_GE_OQ);
    _mm256_storeu_ps(x + i, _mm256_blendv_ps(neg, v, mask));
  }
  for (; i < n; ++i) x[i] = x[i] >= 0.0f ? x[i] : slope * x[i];
}

}  // namespace

const KernelTable* Avx2Kernels() {
  static const KernelTable table = {
      "avx2", AxpyF32, AxpyS2F32, AxpyF64, DotF32, AddF32, LeakyReluF32,
  };
  return &table;
}

}  // namespace gmx

#else  // !GMX_BUILD_AVX2

namespace gmx {
const KernelTable* Avx2Kernels() { return nullptr; }
}  // namespace gmx

#endif
