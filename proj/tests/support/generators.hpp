// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "qperf/circuit.hpp"
#include "qperf/random.hpp"

namespace qperf::test {

struct CircuitShape {
  int num_qubits = 3;
  int num_clbits = 0;
  int num_ops = 12;
  bool barriers = false;
  bool measures = false;
};

/// Angle that is a multiple of pi/4 half of the time, so passes see
/// cancellable and special-case values as well as generic ones.
inline double random_angle(Rng& rng) {
  using std::numbers::pi;
  if (rng.uniform() < 0.5) return (static_cast<double>(rng.below(17)) - 8.0) * pi / 4.0;
  return rng.uniform(-2.0 * pi, 2.0 * pi);
}

inline Circuit random_circuit(Rng& rng, const CircuitShape& shape) {
  static const GateKind kGates[] = {
      GateKind::u1, GateKind::u2, GateKind::u3, GateKind::u,   GateKind::rx,  GateKind::ry,
      GateKind::rz, GateKind::x,  GateKind::y,  GateKind::z,   GateKind::h,   GateKind::s,
      GateKind::sdg, GateKind::t, GateKind::tdg, GateKind::sx, GateKind::sxdg, GateKind::cx,
      GateKind::cz, GateKind::swap, GateKind::ccx};
  Circuit c(shape.num_qubits, shape.num_clbits);
  const auto distinct = [&](int count) {
    std::vector<int> pool(static_cast<std::size_t>(shape.num_qubits));
    for (int q = 0; q < shape.num_qubits; ++q) pool[static_cast<std::size_t>(q)] = q;
    std::vector<int> picked;
    for (int i = 0; i < count; ++i) {
      const std::size_t at = rng.below(pool.size());
      picked.push_back(pool[at]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    return picked;
  };
  while (static_cast<int>(c.size()) < shape.num_ops) {
    const double roll = rng.uniform();
    if (shape.barriers && roll < 0.05) {
      c.barrier(distinct(1 + static_cast<int>(rng.below(static_cast<std::size_t>(shape.num_qubits)))));
      continue;
    }
    if (shape.measures && shape.num_clbits > 0 && roll < 0.10) {
      c.measure(distinct(1)[0], static_cast<int>(rng.below(static_cast<std::size_t>(shape.num_clbits))));
      continue;
    }
    const GateKind kind = kGates[rng.below(std::size(kGates))];
    const auto& sig = signature(kind);
    if (sig.num_qubits > shape.num_qubits) continue;
    std::vector<double> params;
    for (int p = 0; p < sig.num_params; ++p) params.push_back(random_angle(rng));
    c.gate(kind, distinct(sig.num_qubits), params);
  }
  return c;
}

/// Circuit of one- and two-qubit gates only, as accepted by the router.
inline Circuit random_routable_circuit(Rng& rng, int num_qubits, int num_ops) {
  static const GateKind kGates[] = {GateKind::h, GateKind::rz, GateKind::x, GateKind::sx,
                                    GateKind::cx, GateKind::cz, GateKind::swap};
  Circuit c(num_qubits);
  for (int i = 0; i < num_ops; ++i) {
    const GateKind kind = kGates[rng.below(std::size(kGates))];
    const auto& sig = signature(kind);
    const int a = static_cast<int>(rng.below(static_cast<std::size_t>(num_qubits)));
    std::vector<double> params;
    if (sig.num_params == 1) params.push_back(random_angle(rng));
    if (sig.num_qubits == 1) {
      c.gate(kind, {a}, params);
    } else {
      int b = static_cast<int>(rng.below(static_cast<std::size_t>(num_qubits - 1)));
      if (b >= a) ++b;
      c.gate(kind, {a, b}, params);
    }
  }
  return c;
}

/// `groups` well separated shapes with `per_group` noisy copies each. Group g
/// sits at level g * separation with its own phase; noise sd is
/// noise_fraction * separation.
struct PlantedClusters {
  std::vector<std::vector<double>> series;
  std::vector<int> truth;
};

inline PlantedClusters planted_clusters(Rng& rng, int groups, int per_group, int length, double separation,
                                        double noise_fraction) {
  using std::numbers::pi;
  PlantedClusters out;
  for (int g = 0; g < groups; ++g) {
    const double phase = rng.uniform(0.0, 2.0 * pi);
    for (int m = 0; m < per_group; ++m) {
      std::vector<double> s(static_cast<std::size_t>(length));
      for (int t = 0; t < length; ++t) {
        const double center = separation * g + 0.5 * separation * std::sin(2.0 * pi * t / length + phase);
        s[static_cast<std::size_t>(t)] = center + rng.normal(0.0, noise_fraction * separation);
      }
      out.series.push_back(std::move(s));
      out.truth.push_back(g);
    }
  }
  return out;
}

}  // namespace qperf::test
