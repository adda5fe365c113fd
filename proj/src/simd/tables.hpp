// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qperf/simd/kernels.hpp"

namespace qperf::simd::detail {

#if defined(QPERF_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif
#if defined(QPERF_HAVE_NEON)
const KernelTable& neon_kernels();
#endif

}  // namespace qperf::simd::detail
