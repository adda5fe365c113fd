// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qperf {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Device coupling graph. Immutable once constructed.
class DeviceTopology {
 public:
  /// Throws DataError on out-of-range indices, self-loops, duplicate edges
  /// (in either orientation) or a coordinate list of the wrong length.
  DeviceTopology(int num_qubits, std::vector<std::pair<int, int>> edges,
                 std::optional<std::vector<Point2>> coords = std::nullopt);

  int num_qubits() const { return num_qubits_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::optional<std::vector<Point2>>& coords() const { return coords_; }

  /// Sorted adjacency of q.
  const std::vector<int>& neighbors(int q) const;
  bool has_edge(int a, int b) const;
  bool connected() const;

  /// Breadth-first path a..b inclusive, expanding neighbours in ascending
  /// order. Empty if b is unreachable.
  std::vector<int> shortest_path(int a, int b) const;

  /// Line 0-1-...-(n-1).
  static DeviceTopology line(int n);

 private:
  void check_qubit(int q) const;

  int num_qubits_;
  std::vector<std::pair<int, int>> edges_;
  std::optional<std::vector<Point2>> coords_;
  std::vector<std::vector<int>> adjacency_;
};

/// Parses `{"num_qubits":N,"edges":[[a,b],...],"coords":[[x,y],...]}`.
DeviceTopology load_topology(const std::string& text);
std::string topology_to_json(const DeviceTopology& topology);

/// The 127-qubit heavy-hex coupling map of the Eagle-family devices, with
/// grid coordinates (column, row).
DeviceTopology heavy_hex_127();

}  // namespace qperf
