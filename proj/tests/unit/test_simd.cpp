// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <cstdint>
#include <cstring>

#include "qperf/random.hpp"
#include "qperf/simd/kernels.hpp"

using namespace qperf;

namespace {

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

std::vector<double> draw(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal(0.0, 1e3) * (rng.uniform() < 0.1 ? 1e-8 : 1.0);
  return v;
}

// Straight-line statement of the blocked summation order.
double blocked_reference(const std::vector<double>& a, const std::vector<double>& b) {
  double lane[4] = {0, 0, 0, 0};
  const std::size_t body = a.size() / 4 * 4;
  for (std::size_t i = 0; i < body; ++i) {
    const double d = a[i] - b[i];
    lane[i % 4] += d * d;
  }
  double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = body; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

TEST_CASE("scalar table is listed first and active table is available") {
  const auto tables = simd::available_kernels();
  REQUIRE_FALSE(tables.empty());
  CHECK(tables.front() == &simd::scalar_kernels());
  bool found = false;
  for (const auto* t : tables) found = found || t == &simd::active_kernels();
  CHECK(found);
  MESSAGE("active kernels: " << simd::isa_name(simd::active_kernels().isa));
}

TEST_CASE("scalar squared_l2 follows the documented order") {
  Rng rng(1);
  for (std::size_t n = 0; n < 40; ++n) {
    const auto a = draw(rng, n), b = draw(rng, n);
    CHECK(bits(simd::scalar_kernels().squared_l2(a.data(), b.data(), n)) == bits(blocked_reference(a, b)));
  }
}

TEST_CASE("every kernel table is bit-identical to the scalar table") {
  Rng rng(2);
  const auto& ref = simd::scalar_kernels();
  for (const auto* table : simd::available_kernels()) {
    CAPTURE(simd::isa_name(table->isa));
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = rng.below(70);
      const auto a = draw(rng, n), b = draw(rng, n);
      CHECK(bits(table->squared_l2(a.data(), b.data(), n)) == bits(ref.squared_l2(a.data(), b.data(), n)));

      const auto prev = draw(rng, n + 1);
      const double x = rng.normal(0.0, 10.0);
      std::vector<double> c1(n), u1(n), c2(n), u2(n);
      table->dtw_row_terms(x, b.data(), prev.data(), c1.data(), u1.data(), n);
      ref.dtw_row_terms(x, b.data(), prev.data(), c2.data(), u2.data(), n);
      CHECK(std::memcmp(c1.data(), c2.data(), n * sizeof(double)) == 0);
      CHECK(std::memcmp(u1.data(), u2.data(), n * sizeof(double)) == 0);

      auto acc1 = draw(rng, n);
      auto acc2 = acc1;
      table->accumulate(acc1.data(), a.data(), n);
      ref.accumulate(acc2.data(), a.data(), n);
      CHECK(std::memcmp(acc1.data(), acc2.data(), n * sizeof(double)) == 0);

      const double f = rng.normal();
      table->scale(acc1.data(), f, n);
      ref.scale(acc2.data(), f, n);
      CHECK(std::memcmp(acc1.data(), acc2.data(), n * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("dtw row kernel handles infinities from the band") {
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> b{1, 2, 3, 4, 5};
  const std::vector<double> prev{inf, 0, inf, 2, inf, inf};
  for (const auto* table : simd::available_kernels()) {
    std::vector<double> cost(5), up(5);
    table->dtw_row_terms(1.0, b.data(), prev.data(), cost.data(), up.data(), 5);
    CHECK(cost == std::vector<double>{0, 1, 4, 9, 16});
    CHECK(up == std::vector<double>{0, 0, 2, 2, inf});
  }
}
