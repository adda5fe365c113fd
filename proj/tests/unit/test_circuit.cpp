// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>

#include "qperf/circuit.hpp"
#include "qperf/error.hpp"
#include "qperf/random.hpp"
#include "qperf/unitary.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qperf;
using std::numbers::pi;

TEST_CASE("append validates instructions") {
  Circuit c(2, 1);
  CHECK_THROWS_AS(c.gate(GateKind::cx, {0}), DataError);
  CHECK_THROWS_AS(c.gate(GateKind::cx, {0, 0}), DataError);
  CHECK_THROWS_AS(c.gate(GateKind::h, {2}), DataError);
  CHECK_THROWS_AS(c.gate(GateKind::rz, {0}), DataError);
  CHECK_THROWS_AS(c.gate(GateKind::rz, {0}, {std::numeric_limits<double>::infinity()}), DataError);
  CHECK_THROWS_AS(c.barrier({}), DataError);
  CHECK_THROWS_AS(c.measure(0, 1), DataError);
  CHECK(c.empty());
  CHECK(gate_from_name("cx") == GateKind::cx);
  CHECK_FALSE(gate_from_name("measure").has_value());
  CHECK_FALSE(gate_from_name("foo").has_value());
}

TEST_CASE("depth and gate counts") {
  Circuit c(3, 1);
  c.gate(GateKind::h, {0}).gate(GateKind::cx, {0, 1}).gate(GateKind::x, {2});
  CHECK(depth(c) == 2);
  c.barrier({0, 1, 2}).gate(GateKind::x, {2});
  CHECK(depth(c) == 3);
  c.measure(2, 0);
  CHECK(depth(c) == 4);
  CHECK(gate_counts(c) == GateCounts{3, 1});
  CHECK(depth(Circuit(2)) == 0);
}

TEST_CASE("depth matches the explicit DAG oracle") {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    test::CircuitShape shape;
    shape.num_qubits = 1 + static_cast<int>(rng.below(5));
    shape.num_clbits = static_cast<int>(rng.below(3));
    shape.num_ops = static_cast<int>(rng.below(25));
    shape.barriers = true;
    shape.measures = true;
    const auto c = test::random_circuit(rng, shape);
    CHECK(depth(c) == test::dag_depth(c));
  }
}

TEST_CASE("gate matrices are unitary and match known identities") {
  Rng rng(4);
  for (int k = 0; k <= static_cast<int>(GateKind::ccx); ++k) {
    const auto kind = static_cast<GateKind>(k);
    std::vector<double> params;
    for (int p = 0; p < signature(kind).num_params; ++p) params.push_back(rng.uniform(-4, 4));
    CAPTURE(gate_name(kind));
    CHECK(is_unitary(gate_matrix(kind, params)));
  }
  const auto eq = [](const Matrix& a, const Matrix& b) { return equivalent_up_to_global_phase(a, b); };
  CHECK(eq(gate_matrix(GateKind::sx) * gate_matrix(GateKind::sx), gate_matrix(GateKind::x)));
  CHECK(eq(gate_matrix(GateKind::h), gate_matrix(GateKind::u2, std::vector<double>{0, pi})));
  CHECK(eq(gate_matrix(GateKind::rz, std::vector<double>{0.3}), gate_matrix(GateKind::u1, std::vector<double>{0.3})));
  CHECK(eq(gate_matrix(GateKind::s) * gate_matrix(GateKind::s), gate_matrix(GateKind::z)));
  CHECK(eq(gate_matrix(GateKind::t) * gate_matrix(GateKind::tdg), Matrix::identity(2)));
  CHECK_FALSE(eq(gate_matrix(GateKind::x), gate_matrix(GateKind::z)));
  CHECK_THROWS_AS(gate_matrix(GateKind::measure), DataError);
}

TEST_CASE("circuit unitary uses qubit 0 as the least significant bit") {
  Circuit c(2);
  c.gate(GateKind::x, {0});
  const auto u = circuit_unitary(c);
  CHECK(u(1, 0) == cplx(1.0));
  CHECK(u(3, 2) == cplx(1.0));

  Circuit cx(2);
  cx.gate(GateKind::cx, {1, 0});
  const auto v = circuit_unitary(cx);
  // control q1: |10> (index 2) <-> |11> (index 3)
  CHECK(v(3, 2) == cplx(1.0));
  CHECK(v(1, 1) == cplx(1.0));

  Circuit too_wide(11);
  CHECK_THROWS_AS(circuit_unitary(too_wide), DataError);
  Circuit measured(1, 1);
  measured.measure(0, 0);
  CHECK_THROWS_AS(circuit_unitary(measured), DataError);
}

TEST_CASE("circuit unitary agrees with explicit Kronecker products") {
  // U = (H on q1) * (CX control q0 target q1) * (X on q0); kron order is q1 (x) q0.
  Circuit c(2);
  c.gate(GateKind::x, {0}).gate(GateKind::cx, {0, 1}).gate(GateKind::h, {1});
  const auto kron = [](const Matrix& hi, const Matrix& lo) {
    Matrix out(hi.dim() * lo.dim());
    for (std::size_t a = 0; a < hi.dim(); ++a)
      for (std::size_t b = 0; b < hi.dim(); ++b)
        for (std::size_t c2 = 0; c2 < lo.dim(); ++c2)
          for (std::size_t d = 0; d < lo.dim(); ++d) out(a * lo.dim() + c2, b * lo.dim() + d) = hi(a, b) * lo(c2, d);
    return out;
  };
  const auto i2 = Matrix::identity(2);
  const auto expected = kron(gate_matrix(GateKind::h), i2) * gate_matrix(GateKind::cx) * kron(i2, gate_matrix(GateKind::x));
  const auto got = circuit_unitary(c);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(got(r, k) - expected(r, k)) < 1e-15);
}

TEST_CASE("swap and ccx decompose as expected") {
  Circuit s(2), three(2);
  s.gate(GateKind::swap, {0, 1});
  three.gate(GateKind::cx, {0, 1}).gate(GateKind::cx, {1, 0}).gate(GateKind::cx, {0, 1});
  CHECK(equivalent_up_to_global_phase(circuit_unitary(s), circuit_unitary(three)));
  CHECK(equivalent_up_to_global_phase(circuit_unitary(s), test::permutation_matrix({1, 0})));
}
