// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qperf/error.hpp"

namespace qperf {

namespace {

constexpr std::array<GateSignature, 23> kSignatures = {{
    {"u1", 1, 1},   {"u2", 2, 1},  {"u3", 3, 1},  {"u", 3, 1},    {"rx", 1, 1},  {"ry", 1, 1},
    {"rz", 1, 1},   {"x", 0, 1},   {"y", 0, 1},   {"z", 0, 1},    {"h", 0, 1},   {"s", 0, 1},
    {"sdg", 0, 1},  {"t", 0, 1},   {"tdg", 0, 1}, {"sx", 0, 1},   {"sxdg", 0, 1}, {"cx", 0, 2},
    {"cz", 0, 2},   {"swap", 0, 2}, {"ccx", 0, 3}, {"barrier", 0, 0}, {"measure", 0, 1},
}};

}  // namespace

const GateSignature& signature(GateKind kind) { return kSignatures[static_cast<std::size_t>(kind)]; }

std::string_view gate_name(GateKind kind) { return signature(kind).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSignatures.size(); ++i) {
    const auto kind = static_cast<GateKind>(i);
    if (kind == GateKind::barrier || kind == GateKind::measure) continue;
    if (kSignatures[i].name == name) return kind;
  }
  return std::nullopt;
}

Circuit::Circuit(int num_qubits, int num_clbits) : num_qubits_(num_qubits), num_clbits_(num_clbits) {
  if (num_qubits < 0 || num_clbits < 0) throw DataError("register sizes must be non-negative");
}

void Circuit::append(Instruction inst) {
  const auto& sig = signature(inst.kind);
  const std::string name(sig.name);
  if (static_cast<int>(inst.params.size()) != sig.num_params) {
    throw DataError(name + " takes " + std::to_string(sig.num_params) + " parameter(s)");
  }
  for (double p : inst.params) {
    if (!std::isfinite(p)) throw DataError(name + " has a non-finite parameter");
  }
  if (sig.num_qubits > 0 && static_cast<int>(inst.qubits.size()) != sig.num_qubits) {
    throw DataError(name + " acts on " + std::to_string(sig.num_qubits) + " qubit(s)");
  }
  if (inst.qubits.empty()) throw DataError(name + " needs at least one qubit");
  for (int q : inst.qubits) {
    if (q < 0 || q >= num_qubits_) throw DataError(name + ": qubit " + std::to_string(q) + " out of range");
  }
  auto sorted = inst.qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DataError(name + ": repeated qubit operand");
  }
  const std::size_t want_clbits = inst.kind == GateKind::measure ? 1 : 0;
  if (inst.clbits.size() != want_clbits) throw DataError(name + ": wrong number of classical operands");
  for (int c : inst.clbits) {
    if (c < 0 || c >= num_clbits_) throw DataError(name + ": clbit " + std::to_string(c) + " out of range");
  }
  ops_.push_back(std::move(inst));
}

Circuit& Circuit::gate(GateKind kind, std::vector<int> qubits, std::vector<double> params) {
  append(Instruction{kind, std::move(params), std::move(qubits), {}});
  return *this;
}

Circuit& Circuit::barrier(std::vector<int> qubits) {
  append(Instruction{GateKind::barrier, {}, std::move(qubits), {}});
  return *this;
}

Circuit& Circuit::measure(int qubit, int clbit) {
  append(Instruction{GateKind::measure, {}, {qubit}, {clbit}});
  return *this;
}

Circuit Circuit::with_ops(std::vector<Instruction> ops) const {
  Circuit out(num_qubits_, num_clbits_);
  out.ops_.reserve(ops.size());
  for (auto& op : ops) out.append(std::move(op));
  return out;
}

std::size_t depth(const Circuit& circuit) {
  std::vector<std::size_t> qubit_level(static_cast<std::size_t>(circuit.num_qubits()), 0);
  std::vector<std::size_t> clbit_level(static_cast<std::size_t>(circuit.num_clbits()), 0);
  std::size_t deepest = 0;
  for (const auto& op : circuit.ops()) {
    std::size_t level = 0;
    for (int q : op.qubits) level = std::max(level, qubit_level[static_cast<std::size_t>(q)]);
    for (int c : op.clbits) level = std::max(level, clbit_level[static_cast<std::size_t>(c)]);
    if (op.kind != GateKind::barrier) ++level;
    for (int q : op.qubits) qubit_level[static_cast<std::size_t>(q)] = level;
    for (int c : op.clbits) clbit_level[static_cast<std::size_t>(c)] = level;
    deepest = std::max(deepest, level);
  }
  return deepest;
}

GateCounts gate_counts(const Circuit& circuit) {
  GateCounts counts;
  for (const auto& op : circuit.ops()) {
    if (!op.is_gate()) continue;
    if (op.qubits.size() == 1) {
      ++counts.single;
    } else {
      ++counts.multi;
    }
  }
  return counts;
}

}  // namespace qperf
