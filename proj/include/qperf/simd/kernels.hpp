// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel inner loops of the time-series distances.
//
// Each instruction set provides the same table of kernels. The scalar table is
// the reference; every SIMD table must be bit-identical to it, which the
// kernels guarantee by using only element-wise exact operations (sub, mul,
// add, min) and, for reductions, one fixed association order:
//
//   lane k (k = 0..3) accumulates elements i with i % 4 == k over the largest
//   multiple-of-4 prefix, in increasing i; the lanes combine as
//   (l0 + l1) + (l2 + l3); the remaining tail elements are then added in order.

namespace qperf::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  /// sum_i (a[i] - b[i])^2 with the blocked order above. |a| == |b| == n.
  double (*squared_l2)(const double* a, const double* b, std::size_t n);

  /// One DTW row. For j in [0, n):
  ///   cost[j] = (x - b[j])^2
  ///   up[j]   = min(prev[j], prev[j + 1])
  /// `prev` has n + 1 entries: prev[0] is the diagonal predecessor of column 0
  /// and prev[j + 1] the cell directly above column j.
  void (*dtw_row_terms)(double x, const double* b, const double* prev, double* cost, double* up,
                        std::size_t n);

  /// acc[i] += x[i].
  void (*accumulate)(double* acc, const double* x, std::size_t n);

  /// v[i] *= factor.
  void (*scale)(double* v, double factor, std::size_t n);
};

const KernelTable& scalar_kernels();

/// Tables compiled into this binary whose instruction set the running CPU
/// supports. Always contains the scalar table first.
std::vector<const KernelTable*> available_kernels();

/// The table used by the library. Chosen once: the widest supported ISA, or
/// the one named by the QPERF_SIMD environment variable ("scalar", "avx2",
/// "neon") when that is available.
const KernelTable& active_kernels();

// Convenience wrappers over active_kernels().
double squared_l2(std::span<const double> a, std::span<const double> b);
void accumulate(std::span<double> acc, std::span<const double> x);
void scale(std::span<double> v, double factor);

}  // namespace qperf::simd
