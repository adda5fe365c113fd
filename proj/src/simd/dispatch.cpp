// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string_view>

#include "tables.hpp"

namespace qperf::simd {

namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(QPERF_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(QPERF_HAVE_NEON)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* compiled_table(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_kernels();
    case Isa::avx2:
#if defined(QPERF_HAVE_AVX2)
      return &detail::avx2_kernels();
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(QPERF_HAVE_NEON)
      return &detail::neon_kernels();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& select_kernels() {
  const auto tables = available_kernels();
  if (const char* env = std::getenv("QPERF_SIMD")) {
    for (const auto* t : tables) {
      if (isa_name(t->isa) == std::string_view(env)) return *t;
    }
  }
  return *tables.back();
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out;
  for (Isa isa : {Isa::scalar, Isa::neon, Isa::avx2}) {
    const KernelTable* t = compiled_table(isa);
    if (t != nullptr && cpu_supports(isa)) out.push_back(t);
  }
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

double squared_l2(std::span<const double> a, std::span<const double> b) {
  return active_kernels().squared_l2(a.data(), b.data(), a.size());
}

void accumulate(std::span<double> acc, std::span<const double> x) {
  active_kernels().accumulate(acc.data(), x.data(), acc.size());
}

void scale(std::span<double> v, double factor) { active_kernels().scale(v.data(), factor, v.size()); }

}  // namespace qperf::simd
