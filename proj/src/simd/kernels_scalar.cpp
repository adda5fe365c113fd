// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "tables.hpp"

namespace qperf::simd {

namespace {

double squared_l2_scalar(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t k = 0; k < 4; ++k) {
      const double d = a[i + k] - b[i + k];
      lane[k] += d * d;
    }
  }
  double sum = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

void dtw_row_terms_scalar(double x, const double* b, const double* prev, double* cost, double* up,
                          std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double d = x - b[j];
    cost[j] = d * d;
    up[j] = std::min(prev[j], prev[j + 1]);
  }
}

void accumulate_scalar(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void scale_scalar(double* v, double factor, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) v[i] *= factor;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, squared_l2_scalar, dtw_row_terms_scalar, accumulate_scalar,
                                 scale_scalar};
  return table;
}

}  // namespace qperf::simd
