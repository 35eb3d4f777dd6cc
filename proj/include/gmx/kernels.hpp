// Copyright (c) the gmxc Authors. All rights reserved.
//
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#ifndef GMX_KERNELS_H_
#define GMX_KERNELS_H_

namespace gmx {

// Data-parallel inner loops used by the transforms and metrics. Every entry
// has a scalar reference implementation and (on x86-64) an AVX2+FMA variant;
// the active table is resolved once per process so encode and decode always
// run the same lane. Set GMXC_KERNELS=scalar|avx2 to override.
//
// SIMD lanes may reassociate additions and contract to FMA, so results can
// differ from the scalar reference in the last bits; equivalence tests bound
// the divergence.
struct KernelTable {
  const char* name;

  // dst[i] += a * src[i]
  void (*axpy_f32)(float* dst, const float* src, float a, int n);
  // dst[i] += a * src[2*i]  (stride-2 gather, used by downsampling convs)
  void (*axpy_s2_f32)(float* dst, const float* src, float a, int n);
  // dst[i] += a * src[i], double (metrics blur)
  void (*axpy_f64)(double* dst, const double* src, double a, int n);
  // sum_i a[i]*b[i]
  float (*dot_f32)(const float* a, const float* b, int n);
  // dst[i] += src[i]
  void (*add_f32)(float* dst, const float* src, int n);
  // x[i] = x[i] >= 0 ? x[i] : slope * x[i]
  void (*leaky_relu_f32)(float* x, float slope, int n);
};

const KernelTable& ScalarKernels();

// Null when the binary was built without AVX2 support.
const KernelTable* Avx2Kernels();

// True when the running CPU supports AVX2+FMA and the binary carries the lane.
bool Avx2Usable();

// The lane every forward pass and metric uses. Resolved once.
const KernelTable& ActiveKernels();

}  // namespace gmx

#endif  // GMX_KERNELS_H_
