// Copyright (c) the gmxc Authors. All rights reserved.
//
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "gmx/kernels.hpp"

namespace gmx {
namespace {

void AxpyF32(float* dst, const float* src, float a, int n) {
  for (int i = 0; i < n; ++i) dst[i] += a * src[i];
}

void AxpyS2F32(float* dst, const float* src, float a, int n) {
  for (int i = 0; i < n; ++i) dst[i] += a * src[2 * i];
}

void AxpyF64(double* dst, const double* src, double a, int n) {
  for (int i = 0; i < n; ++i) dst[i] += a * src[i];
}

float DotF32(const float* a, const float* b, int n) {
  float acc = 0.0f;
  for (int i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void AddF32(float* dst, const float* src, int n) {
  for (int i = 0; i < n; ++i) dst[i] += src[i];
}

void LeakyReluF32(float* x, float slope, int n) {
  for (int i = 0; i < n; ++i) x[i] = x[i] >= 0.0f ? x[i] : slope * x[i];
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table = {
      "scalar", AxpyF32, AxpyS2F32, AxpyF64, DotF32, AddF32, LeakyReluF32,
  };
  return table;
}

}  // namespace gmx
