// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace qperf {

enum class GateKind {
  u1, u2, u3, u,
  rx, ry, rz,
  x, y, z, h, s, sdg, t, tdg, sx, sxdg,
  cx, cz, swap, ccx,
  barrier, measure,
};

struct GateSignature {
  std::string_view name;
  int num_params;
  int num_qubits;  // 0 = variadic (barrier)
};

const GateSignature& signature(GateKind kind);
std::string_view gate_name(GateKind kind);
/// Looks up a gate application name (not barrier/measure).
std::optional<GateKind> gate_from_name(std::string_view name);

struct Instruction {
  GateKind kind = GateKind::x;
  std::vector<double> params;
  std::vector<int> qubits;
  std::vector<int> clbits;

  bool is_gate() const { return kind != GateKind::barrier && kind != GateKind::measure; }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Flat-register circuit. Operand indices refer to a single quantum and a
/// single classical register.
class Circuit {
 public:
  Circuit() = default;
  Circuit(int num_qubits, int num_clbits = 0);

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::vector<Instruction>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  /// Validates arity, parameter count, operand range and distinctness.
  /// Throws DataError.
  void append(Instruction inst);

  // Shorthands for building circuits in code and tests.
  Circuit& gate(GateKind kind, std::vector<int> qubits, std::vector<double> params = {});
  Circuit& barrier(std::vector<int> qubits);
  Circuit& measure(int qubit, int clbit);

  /// Circuit with the same registers and `ops` (validated).
  Circuit with_ops(std::vector<Instruction> ops) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_ = 0;
  int num_clbits_ = 0;
  std::vector<Instruction> ops_;
};

/// Dependency-layer count. Gates and measures occupy one layer on every qubit
/// and clbit they touch; barriers occupy none but align their qubits.
std::size_t depth(const Circuit& circuit);

struct GateCounts {
  std::size_t single = 0;
  std::size_t multi = 0;

  std::size_t total() const { return single + multi; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Barriers and measures are not counted.
GateCounts gate_counts(const Circuit& circuit);

}  // namespace qperf
