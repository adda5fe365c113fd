// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>

#include "qperf/qasm.hpp"
#include "qperf/random.hpp"
#include "support/generators.hpp"

using namespace qperf;

namespace {

const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

QasmError error_of(const std::string& body) {
  try {
    parse_qasm(std::string(kHeader) + body);
  } catch (const QasmError& e) {
    return e;
  }
  FAIL("expected a QasmError for: " << body);
  return QasmError(QasmErrorKind::syntax, 0, 0, "");
}

}  // namespace

TEST_CASE("parse a Bell circuit") {
  const auto c = parse_qasm(std::string(kHeader) + "qreg q[2];\ncreg c[2];\nh q[0];\ncx q[0],q[1];\nmeasure q -> c;\n");
  CHECK(c.num_qubits() == 2);
  CHECK(c.num_clbits() == 2);
  REQUIRE(c.size() == 4);
  CHECK(c.ops()[0].kind == GateKind::h);
  CHECK(c.ops()[1].qubits == std::vector<int>{0, 1});
  CHECK(c.ops()[3].kind == GateKind::measure);
  CHECK(c.ops()[3].clbits == std::vector<int>{1});
}

TEST_CASE("registers flatten in declaration order and broadcast") {
  const auto c = parse_qasm(std::string(kHeader) + "qreg a[2];\nqreg b[2];\ncx a,b;\nh b[1];\nbarrier a,b[0];\n");
  REQUIRE(c.size() == 4);
  CHECK(c.ops()[0].qubits == std::vector<int>{0, 2});
  CHECK(c.ops()[1].qubits == std::vector<int>{1, 3});
  CHECK(c.ops()[2].qubits == std::vector<int>{3});
  CHECK(c.ops()[3].qubits == std::vector<int>{0, 1, 2});
}

TEST_CASE("angle expressions and aliases") {
  using std::numbers::pi;
  const auto c = parse_qasm(std::string(kHeader) +
                            "qreg q[2];\nrz(-pi/2) q[0];\nU(pi*2, -(1+1)/4, 1.5e-3) q[1];\nCX q[1], q[0];\n");
  CHECK(c.ops()[0].params[0] == -pi / 2);
  CHECK(c.ops()[1].kind == GateKind::u);
  CHECK(c.ops()[1].params == std::vector<double>{2 * pi, -0.5, 1.5e-3});
  CHECK(c.ops()[2].kind == GateKind::cx);
}

TEST_CASE("error kinds and locations") {
  auto e = error_of("qreg q[2];\nfoo q[0];\n");
  CHECK(e.kind() == QasmErrorKind::unknown_gate);
  CHECK(e.line() == 4);
  CHECK(e.column() == 1);

  e = error_of("qreg q[2];\nh q[2];\n");
  CHECK(e.kind() == QasmErrorKind::index_out_of_range);
  CHECK(e.line() == 4);
  CHECK(e.column() == 5);

  CHECK(error_of("qreg q[2];\ncx q[0];\n").kind() == QasmErrorKind::bad_arity);
  CHECK(error_of("qreg q[2];\ncx q[0],q[0];\n").kind() == QasmErrorKind::bad_arity);
  CHECK(error_of("qreg q[2];\nrz q[0];\n").kind() == QasmErrorKind::bad_arity);
  CHECK(error_of("qreg q[2];\nh(0.1) q[0];\n").kind() == QasmErrorKind::bad_arity);
  CHECK(error_of("qreg q[2];\nqreg q[3];\n").kind() == QasmErrorKind::redeclaration);
  CHECK(error_of("qreg q[2];\ngate g a { x a; }\n").kind() == QasmErrorKind::unsupported_feature);
  CHECK(error_of("qreg q[1];\ncreg c[1];\nif(c==1) x q[0];\n").kind() == QasmErrorKind::unsupported_feature);
  CHECK(error_of("qreg q[1];\nrz(theta) q[0];\n").kind() == QasmErrorKind::unsupported_feature);
  CHECK(error_of("qreg q[1]\nh q[0];\n").kind() == QasmErrorKind::syntax);
  CHECK(error_of("h r[0];\n").kind() == QasmErrorKind::syntax);
  CHECK(error_of("qreg q[0];\n").kind() == QasmErrorKind::syntax);
  CHECK_THROWS_AS(parse_qasm("OPENQASM 3.0;\n"), QasmError);
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;\ninclude \"other.inc\";\n"), QasmError);

  e = error_of("qreg q[1];\nh q[0]; @\n");
  CHECK(e.kind() == QasmErrorKind::syntax);
  CHECK(e.line() == 4);
  CHECK(e.column() == 9);
}

TEST_CASE("emit is canonical and parses back") {
  Circuit c(3, 2);
  c.gate(GateKind::rz, {1}, {0.1}).gate(GateKind::ccx, {2, 0, 1}).barrier({0, 2}).measure(2, 1);
  const std::string text = emit_qasm(c);
  CHECK(text ==
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\ncreg c[2];\nrz(0.10000000000000001) q[1];\n"
        "ccx q[2],q[0],q[1];\nbarrier q[0],q[2];\nmeasure q[2] -> c[1];\n");
  CHECK(parse_qasm(text) == c);
  CHECK(emit_qasm(parse_qasm(text)) == text);
}

TEST_CASE("random circuits round-trip through emit and parse") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    test::CircuitShape shape;
    shape.num_qubits = 1 + static_cast<int>(rng.below(6));
    shape.num_clbits = static_cast<int>(rng.below(4));
    shape.num_ops = static_cast<int>(rng.below(30));
    shape.barriers = true;
    shape.measures = true;
    const auto c = test::random_circuit(rng, shape);
    CHECK(parse_qasm(emit_qasm(c)) == c);
  }
}
