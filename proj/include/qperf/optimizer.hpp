// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qperf/circuit.hpp"
#include "qperf/topology.hpp"

namespace qperf {

/// Angles closer than this to 0 (mod 2pi) make an rz an identity.
inline constexpr double kAngleTolerance = 1e-10;
inline constexpr int kMaxFixpointRounds = 10;

/// Rewrites every gate into the {rz, sx, x, cx} basis. Each rewrite equals the
/// original up to a global phase. Barriers and measures pass through.
Circuit translate_to_basis(const Circuit& circuit);

/// Single left-to-right sweep cancelling adjacent self-inverse pairs with
/// identical operands, merging adjacent rz on a qubit and dropping identity
/// rz. Cancellation cascades (x rz(a) rz(-a) x vanishes entirely).
Circuit cancel_adjacent_inverses(const Circuit& circuit);

/// Replaces each maximal run of single-qubit gates on a qubit with the
/// shortest of rz / sx / x / rz-sx-rz / rz-sx-rz-sx-rz forms that reproduces
/// the run's unitary. A run is left as is unless the synthesis is shorter.
Circuit fuse_single_qubit_runs(const Circuit& circuit);

/// Slides rz past cx controls and x past cx targets to cancel or merge with
/// matching gates, then runs cancel_adjacent_inverses.
Circuit commute_and_cancel(const Circuit& circuit);

struct RoutedCircuit {
  Circuit circuit;                 // over the device's physical qubits
  std::vector<int> layout;         // logical qubit -> final physical qubit
};

/// Greedy SWAP insertion (3 cx per SWAP) along shortest paths, moving the
/// first operand toward the second. Starts from the identity layout. Throws
/// DataError when operands are disconnected, the circuit is wider than the
/// device, or a gate acts on more than two qubits.
RoutedCircuit route_to_coupling(const Circuit& circuit, const DeviceTopology& topology);

struct TranspileResult {
  Circuit circuit;
  std::optional<std::vector<int>> layout;
};

/// Runs the pass pipelines of levels 1..3 and returns all three results, with
/// the keep-best guard applied in level order.
std::vector<TranspileResult> transpile_all(const Circuit& circuit,
                                           const DeviceTopology* topology = nullptr);

/// Result for one level (1, 2 or 3), keep-best guard included.
TranspileResult transpile(const Circuit& circuit, int level,
                          const DeviceTopology* topology = nullptr);

struct LevelMetrics {
  int level = 0;
  std::size_t depth = 0;
  std::size_t single = 0;
  std::size_t multi = 0;
  std::string qasm;
};

struct OptimizationReport {
  std::size_t input_depth = 0;
  std::size_t input_single = 0;
  std::size_t input_multi = 0;
  std::vector<LevelMetrics> levels;
  std::optional<std::vector<int>> layout;
};

/// Parses once and reports levels 1..3 (or the requested subset, in order).
/// Throws QasmError on bad input.
OptimizationReport optimization_report(std::string_view qasm,
                                       const DeviceTopology* topology = nullptr,
                                       const std::vector<int>& levels = {1, 2, 3});

}  // namespace qperf
