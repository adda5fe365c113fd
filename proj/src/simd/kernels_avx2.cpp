// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <immintrin.h>

#include "tables.hpp"

namespace qperf::simd::detail {

namespace {

double squared_l2_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

// _mm256_min_pd(p, q) returns q when the lanes compare equal or unordered;
// inputs are never NaN and equal values are interchangeable, so this matches
// std::min bit for bit.
void dtw_row_terms_avx2(double x, const double* b, const double* prev, double* cost, double* up,
                        std::size_t n) {
  const __m256d vx = _mm256_set1_pd(x);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d d = _mm256_sub_pd(vx, _mm256_loadu_pd(b + j));
    _mm256_storeu_pd(cost + j, _mm256_mul_pd(d, d));
    _mm256_storeu_pd(up + j, _mm256_min_pd(_mm256_loadu_pd(prev + j), _mm256_loadu_pd(prev + j + 1)));
  }
  for (; j < n; ++j) {
    const double d = x - b[j];
    cost[j] = d * d;
    up[j] = prev[j + 1] < prev[j] ? prev[j + 1] : prev[j];
  }
}

void accumulate_avx2(double* acc, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void scale_avx2(double* v, double factor, std::size_t n) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(v + i, _mm256_mul_pd(_mm256_loadu_pd(v + i), f));
  }
  for (; i < n; ++i) v[i] *= factor;
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{Isa::avx2, squared_l2_avx2, dtw_row_terms_avx2, accumulate_avx2, scale_avx2};
  return table;
}

}  // namespace qperf::simd::detail
