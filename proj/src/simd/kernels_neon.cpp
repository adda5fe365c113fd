// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <arm_neon.h>

#include "tables.hpp"

namespace qperf::simd::detail {

namespace {

// Two float64x2 accumulators reproduce the four reference lanes:
// lo = {l0, l1}, hi = {l2, l3}.
double squared_l2_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    const float64x2_t d1 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    lo = vaddq_f64(lo, vmulq_f64(d0, d0));
    hi = vaddq_f64(hi, vmulq_f64(d1, d1));
  }
  double sum = (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) + (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

void dtw_row_terms_neon(double x, const double* b, const double* prev, double* cost, double* up,
                        std::size_t n) {
  const float64x2_t vx = vdupq_n_f64(x);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t d = vsubq_f64(vx, vld1q_f64(b + j));
    vst1q_f64(cost + j, vmulq_f64(d, d));
    vst1q_f64(up + j, vminq_f64(vld1q_f64(prev + j), vld1q_f64(prev + j + 1)));
  }
  for (; j < n; ++j) {
    const double d = x - b[j];
    cost[j] = d * d;
    up[j] = prev[j + 1] < prev[j] ? prev[j + 1] : prev[j];
  }
}

void accumulate_neon(double* acc, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
  for (; i < n; ++i) acc[i] += x[i];
}

void scale_neon(double* v, double factor, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(v + i, vmulq_n_f64(vld1q_f64(v + i), factor));
  for (; i < n; ++i) v[i] *= factor;
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table{Isa::neon, squared_l2_neon, dtw_row_terms_neon, accumulate_neon, scale_neon};
  return table;
}

}  // namespace qperf::simd::detail
