// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "qperf/error.hpp"
#include "qperf/qasm.hpp"
#include "qperf/unitary.hpp"

namespace qperf {

namespace {

using std::numbers::pi;

double normalize_angle(double a) { return std::remainder(a, 2.0 * pi); }

bool is_zero_angle(double a) { return std::abs(normalize_angle(a)) < kAngleTolerance; }

bool is_self_inverse(GateKind k) {
  switch (k) {
    case GateKind::x:
    case GateKind::y:
    case GateKind::z:
    case GateKind::h:
    case GateKind::cx:
    case GateKind::cz:
    case GateKind::swap:
    case GateKind::ccx:
      return true;
    default:
      return false;
  }
}

Instruction one(GateKind kind, int q, std::vector<double> params = {}) {
  return Instruction{kind, std::move(params), {q}, {}};
}

Instruction two(GateKind kind, int a, int b) { return Instruction{kind, {}, {a, b}, {}}; }

void emit_u3(std::vector<Instruction>& out, int q, double theta, double phi, double lambda) {
  out.push_back(one(GateKind::rz, q, {lambda}));
  out.push_back(one(GateKind::sx, q));
  out.push_back(one(GateKind::rz, q, {theta + pi}));
  out.push_back(one(GateKind::sx, q));
  out.push_back(one(GateKind::rz, q, {phi + pi}));
}

void emit_basis(std::vector<Instruction>& out, const Instruction& op) {
  const auto& p = op.params;
  const auto& q = op.qubits;
  switch (op.kind) {
    case GateKind::x:
    case GateKind::sx:
    case GateKind::rz:
    case GateKind::cx:
    case GateKind::barrier:
    case GateKind::measure:
      out.push_back(op);
      return;
    case GateKind::u1:
      out.push_back(one(GateKind::rz, q[0], {p[0]}));
      return;
    case GateKind::z:
      out.push_back(one(GateKind::rz, q[0], {pi}));
      return;
    case GateKind::s:
      out.push_back(one(GateKind::rz, q[0], {pi / 2}));
      return;
    case GateKind::sdg:
      out.push_back(one(GateKind::rz, q[0], {-pi / 2}));
      return;
    case GateKind::t:
      out.push_back(one(GateKind::rz, q[0], {pi / 4}));
      return;
    case GateKind::tdg:
      out.push_back(one(GateKind::rz, q[0], {-pi / 4}));
      return;
    case GateKind::y:  // Y ~ X RZ(pi)
      out.push_back(one(GateKind::rz, q[0], {pi}));
      out.push_back(one(GateKind::x, q[0]));
      return;
    case GateKind::h:  // H ~ RZ(pi/2) SX RZ(pi/2)
      out.push_back(one(GateKind::rz, q[0], {pi / 2}));
      out.push_back(one(GateKind::sx, q[0]));
      out.push_back(one(GateKind::rz, q[0], {pi / 2}));
      return;
    case GateKind::sxdg:  // SXdg ~ RZ(pi) SX RZ(pi)
      out.push_back(one(GateKind::rz, q[0], {pi}));
      out.push_back(one(GateKind::sx, q[0]));
      out.push_back(one(GateKind::rz, q[0], {pi}));
      return;
    case GateKind::rx:
      emit_u3(out, q[0], p[0], -pi / 2, pi / 2);
      return;
    case GateKind::ry:
      emit_u3(out, q[0], p[0], 0.0, 0.0);
      return;
    case GateKind::u2:
      emit_u3(out, q[0], pi / 2, p[0], p[1]);
      return;
    case GateKind::u3:
    case GateKind::u:
      emit_u3(out, q[0], p[0], p[1], p[2]);
      return;
    case GateKind::cz:
      emit_basis(out, one(GateKind::h, q[1]));
      out.push_back(two(GateKind::cx, q[0], q[1]));
      emit_basis(out, one(GateKind::h, q[1]));
      return;
    case GateKind::swap:
      out.push_back(two(GateKind::cx, q[0], q[1]));
      out.push_back(two(GateKind::cx, q[1], q[0]));
      out.push_back(two(GateKind::cx, q[0], q[1]));
      return;
    case GateKind::ccx: {
      const int a = q[0], b = q[1], c = q[2];
      const Instruction seq[] = {
          one(GateKind::h, c),       two(GateKind::cx, b, c), one(GateKind::tdg, c), two(GateKind::cx, a, c),
          one(GateKind::t, c),       two(GateKind::cx, b, c), one(GateKind::tdg, c), two(GateKind::cx, a, c),
          one(GateKind::t, b),       one(GateKind::t, c),     one(GateKind::h, c),   two(GateKind::cx, a, b),
          one(GateKind::t, a),       one(GateKind::tdg, b),   two(GateKind::cx, a, b),
      };
      for (const auto& s : seq) emit_basis(out, s);
      return;
    }
  }
  throw DataError("cannot translate gate " + std::string(gate_name(op.kind)));
}

/// Output buffer with tombstones and, per qubit, the stack of live output
/// positions touching it (top = most recent).
class SweepBuffer {
 public:
  explicit SweepBuffer(int num_qubits) : stacks_(static_cast<std::size_t>(num_qubits)) {}

  std::optional<std::size_t> last_on(int q) const {
    const auto& s = stacks_[static_cast<std::size_t>(q)];
    if (s.empty()) return std::nullopt;
    return s.back();
  }

  Instruction& at(std::size_t pos) { return *slots_[pos]; }

  void push(Instruction op) {
    for (int q : op.qubits) stacks_[static_cast<std::size_t>(q)].push_back(slots_.size());
    slots_.push_back(std::move(op));
  }

  /// Removes the most recent instruction on its qubits.
  void erase(std::size_t pos) {
    for (int q : slots_[pos]->qubits) stacks_[static_cast<std::size_t>(q)].pop_back();
    slots_[pos].reset();
  }

  std::vector<Instruction> take() {
    std::vector<Instruction> out;
    for (auto& s : slots_) {
      if (s) out.push_back(std::move(*s));
    }
    return out;
  }

 private:
  std::vector<std::optional<Instruction>> slots_;
  std::vector<std::vector<std::size_t>> stacks_;
};

// ---------------------------------------------------------------------------
// Single-qubit synthesis

Matrix run_unitary(const std::vector<Instruction>& run) {
  Matrix u = Matrix::identity(2);
  for (const auto& op : run) u = gate_matrix(op.kind, op.params) * u;
  return u;
}

/// max |e^{i phase} a - b| <= tol for the phase that aligns the largest entry.
bool close_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < a.data().size(); ++k) {
    if (std::abs(a.data()[k]) > std::abs(a.data()[best])) best = k;
  }
  const cplx ratio = b.data()[best] / a.data()[best];
  if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
  const cplx phase = ratio / std::abs(ratio);
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    if (std::abs(phase * a.data()[k] - b.data()[k]) > tol) return false;
  }
  return true;
}

std::vector<Instruction> clean(std::vector<Instruction> seq) {
  std::vector<Instruction> out;
  for (auto& op : seq) {
    if (op.kind == GateKind::rz) {
      if (is_zero_angle(op.params[0])) continue;
      op.params[0] = normalize_angle(op.params[0]);
    }
    out.push_back(std::move(op));
  }
  return out;
}

/// Shortest basis sequence equal to `u` up to phase.
std::optional<std::vector<Instruction>> synthesize(const Matrix& u, int q) {
  const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const cplx root = std::sqrt(det);
  const cplx a = u(0, 0) / root;
  const cplx b = u(1, 0) / root;
  const double theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
  const double sum = std::abs(a) > 1e-12 ? -2.0 * std::arg(a) : 0.0;   // phi + lambda
  const double diff = std::abs(b) > 1e-12 ? 2.0 * std::arg(b) : 0.0;   // phi - lambda
  const double phi = (sum + diff) / 2.0;
  const double lambda = (sum - diff) / 2.0;

  std::vector<std::vector<Instruction>> candidates;
  candidates.push_back({});
  candidates.push_back({one(GateKind::rz, q, {sum})});
  candidates.push_back({one(GateKind::sx, q)});
  candidates.push_back({one(GateKind::x, q)});
  candidates.push_back({one(GateKind::x, q), one(GateKind::rz, q, {phi - lambda + pi})});
  candidates.push_back({one(GateKind::rz, q, {lambda - pi / 2}), one(GateKind::sx, q), one(GateKind::rz, q, {phi + pi / 2})});
  std::vector<Instruction> general;
  emit_u3(general, q, theta, phi, lambda);
  candidates.push_back(std::move(general));

  std::optional<std::vector<Instruction>> best;
  for (auto& c : candidates) {
    auto seq = clean(std::move(c));
    if (best && seq.size() >= best->size()) continue;
    if (close_up_to_phase(u, run_unitary(seq), kAngleTolerance)) best = std::move(seq);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Commutation

bool touches(const Instruction& op, int q) {
  return std::find(op.qubits.begin(), op.qubits.end(), q) != op.qubits.end();
}

bool shares_qubit(const Instruction& a, const Instruction& b) {
  return std::any_of(a.qubits.begin(), a.qubits.end(), [&](int q) { return touches(b, q); });
}

/// rz on a cx control, or x on a cx target.
bool commutes(const Instruction& a, const Instruction& b) {
  const auto rule = [](const Instruction& single, const Instruction& cx) {
    if (cx.kind != GateKind::cx) return false;
    if (single.kind == GateKind::rz) return single.qubits[0] == cx.qubits[0];
    if (single.kind == GateKind::x) return single.qubits[0] == cx.qubits[1];
    return false;
  };
  return rule(a, b) || rule(b, a);
}

std::size_t total_gates(const Circuit& c) { return gate_counts(c).total(); }

/// Keep-best comparison: strictly shallower, then fewer gates.
bool strictly_better(const Circuit& a, const Circuit& b) {
  const std::size_t da = depth(a), db = depth(b);
  if (da != db) return da < db;
  return total_gates(a) < total_gates(b);
}

}  // namespace

Circuit translate_to_basis(const Circuit& circuit) {
  std::vector<Instruction> out;
  for (const auto& op : circuit.ops()) emit_basis(out, op);
  return circuit.with_ops(std::move(out));
}

Circuit cancel_adjacent_inverses(const Circuit& circuit) {
  SweepBuffer buf(circuit.num_qubits());
  for (const auto& op : circuit.ops()) {
    if (op.kind == GateKind::rz && is_zero_angle(op.params[0])) continue;
    if (op.is_gate() && (is_self_inverse(op.kind) || op.kind == GateKind::rz)) {
      const auto prev = buf.last_on(op.qubits[0]);
      bool adjacent = prev.has_value();
      for (int q : op.qubits) adjacent = adjacent && buf.last_on(q) == prev;
      if (adjacent) {
        Instruction& e = buf.at(*prev);
        if (e.kind == op.kind && e.qubits == op.qubits) {
          if (op.kind == GateKind::rz) {
            e.params[0] = normalize_angle(e.params[0] + op.params[0]);
            if (is_zero_angle(e.params[0])) buf.erase(*prev);
          } else {
            buf.erase(*prev);
          }
          continue;
        }
      }
    }
    buf.push(op);
  }
  return circuit.with_ops(buf.take());
}

Circuit fuse_single_qubit_runs(const Circuit& circuit) {
  std::vector<std::vector<Instruction>> pending(static_cast<std::size_t>(circuit.num_qubits()));
  std::vector<Instruction> out;
  const auto flush = [&](int q) {
    auto& run = pending[static_cast<std::size_t>(q)];
    if (run.empty()) return;
    const auto fused = synthesize(run_unitary(run), q);
    if (fused && fused->size() < run.size()) {
      out.insert(out.end(), fused->begin(), fused->end());
    } else {
      out.insert(out.end(), run.begin(), run.end());
    }
    run.clear();
  };
  for (const auto& op : circuit.ops()) {
    if (op.is_gate() && op.qubits.size() == 1) {
      pending[static_cast<std::size_t>(op.qubits[0])].push_back(op);
      continue;
    }
    for (int q : op.qubits) flush(q);
    out.push_back(op);
  }
  for (int q = 0; q < circuit.num_qubits(); ++q) flush(q);
  return circuit.with_ops(std::move(out));
}

Circuit commute_and_cancel(const Circuit& circuit) {
  std::vector<std::optional<Instruction>> slots;
  for (const auto& op : circuit.ops()) {
    const bool candidate = op.kind == GateKind::cx || op.kind == GateKind::x || op.kind == GateKind::rz;
    bool consumed = false;
    if (candidate) {
      for (std::size_t k = slots.size(); k-- > 0;) {
        if (!slots[k] || !shares_qubit(*slots[k], op)) continue;
        Instruction& h = *slots[k];
        if (h.kind == op.kind && h.qubits == op.qubits) {
          if (op.kind == GateKind::rz) {
            h.params[0] = normalize_angle(h.params[0] + op.params[0]);
            if (is_zero_angle(h.params[0])) slots[k].reset();
          } else {
            slots[k].reset();
          }
          consumed = true;
          break;
        }
        if (!commutes(h, op)) break;
      }
    }
    if (!consumed) slots.push_back(op);
  }
  std::vector<Instruction> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return cancel_adjacent_inverses(circuit.with_ops(std::move(out)));
}

RoutedCircuit route_to_coupling(const Circuit& circuit, const DeviceTopology& topology) {
  const int n = topology.num_qubits();
  if (circuit.num_qubits() > n) {
    throw DataError("circuit uses " + std::to_string(circuit.num_qubits()) + " qubits but the device has " +
                    std::to_string(n));
  }
  std::vector<int> l2p(static_cast<std::size_t>(n));
  std::vector<int> p2l(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) l2p[static_cast<std::size_t>(i)] = p2l[static_cast<std::size_t>(i)] = i;

  Circuit out(n, circuit.num_clbits());
  const auto swap_physical = [&](int p, int q) {
    out.gate(GateKind::cx, {p, q}).gate(GateKind::cx, {q, p}).gate(GateKind::cx, {p, q});
    const int lp = p2l[static_cast<std::size_t>(p)];
    const int lq = p2l[static_cast<std::size_t>(q)];
    std::swap(p2l[static_cast<std::size_t>(p)], p2l[static_cast<std::size_t>(q)]);
    l2p[static_cast<std::size_t>(lp)] = q;
    l2p[static_cast<std::size_t>(lq)] = p;
  };

  for (const auto& op : circuit.ops()) {
    if (op.is_gate() && op.qubits.size() > 2) {
      throw DataError("routing supports gates on at most two qubits; translate " + std::string(gate_name(op.kind)) +
                      " first");
    }
    if (op.is_gate() && op.qubits.size() == 2) {
      const int a = l2p[static_cast<std::size_t>(op.qubits[0])];
      const int b = l2p[static_cast<std::size_t>(op.qubits[1])];
      if (!topology.has_edge(a, b)) {
        const auto path = topology.shortest_path(a, b);
        if (path.empty()) {
          throw DataError("physical qubits " + std::to_string(a) + " and " + std::to_string(b) + " are disconnected");
        }
        for (std::size_t k = 0; k + 2 < path.size(); ++k) swap_physical(path[k], path[k + 1]);
      }
    }
    Instruction mapped = op;
    for (int& q : mapped.qubits) q = l2p[static_cast<std::size_t>(q)];
    out.append(std::move(mapped));
  }
  return {std::move(out), std::move(l2p)};
}

std::vector<TranspileResult> transpile_all(const Circuit& circuit, const DeviceTopology* topology) {
  Circuit base = cancel_adjacent_inverses(translate_to_basis(circuit));
  std::optional<std::vector<int>> layout;
  if (topology != nullptr) {
    auto routed = route_to_coupling(base, *topology);
    base = std::move(routed.circuit);
    layout = std::move(routed.layout);
  }

  const auto round = [](const Circuit& c) { return commute_and_cancel(fuse_single_qubit_runs(c)); };
  Circuit level2 = round(base);
  Circuit level3 = level2;
  for (int r = 1; r < kMaxFixpointRounds; ++r) {
    Circuit next = round(level3);
    if (next == level3) break;
    level3 = std::move(next);
  }

  std::vector<TranspileResult> results;
  results.push_back({std::move(base), layout});
  for (Circuit* c : {&level2, &level3}) {
    const Circuit& prev = results.back().circuit;
    results.push_back({strictly_better(prev, *c) ? prev : std::move(*c), layout});
  }
  return results;
}

TranspileResult transpile(const Circuit& circuit, int level, const DeviceTopology* topology) {
  if (level < 1 || level > 3) throw DataError("optimization level must be 1, 2 or 3");
  return transpile_all(circuit, topology)[static_cast<std::size_t>(level - 1)];
}

OptimizationReport optimization_report(std::string_view qasm, const DeviceTopology* topology,
                                       const std::vector<int>& levels) {
  for (int level : levels) {
    if (level < 1 || level > 3) throw DataError("optimization level must be 1, 2 or 3");
  }
  const Circuit input = parse_qasm(qasm);
  OptimizationReport report;
  const GateCounts in_counts = gate_counts(input);
  report.input_depth = depth(input);
  report.input_single = in_counts.single;
  report.input_multi = in_counts.multi;

  auto results = transpile_all(input, topology);
  report.layout = results.front().layout;
  for (int level : levels) {
    const Circuit& c = results[static_cast<std::size_t>(level - 1)].circuit;
    const GateCounts counts = gate_counts(c);
    report.levels.push_back({level, depth(c), counts.single, counts.multi, emit_qasm(c)});
  }
  return report;
}

}  // namespace qperf
