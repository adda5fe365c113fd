// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include <json.hpp>

#include "qperf/error.hpp"

namespace qperf {

DeviceTopology::DeviceTopology(int num_qubits, std::vector<std::pair<int, int>> edges,
                               std::optional<std::vector<Point2>> coords)
    : num_qubits_(num_qubits), edges_(std::move(edges)), coords_(std::move(coords)) {
  if (num_qubits_ < 1) throw DataError("topology needs at least one qubit");
  adjacency_.resize(static_cast<std::size_t>(num_qubits_));
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges_) {
    const std::string label = "edge [" + std::to_string(a) + "," + std::to_string(b) + "]";
    if (a < 0 || b < 0 || a >= num_qubits_ || b >= num_qubits_) {
      throw DataError(label + " has a qubit index out of range (num_qubits " + std::to_string(num_qubits_) + ")");
    }
    if (a == b) throw DataError(label + " is a self-loop");
    if (!seen.insert(std::minmax(a, b)).second) throw DataError(label + " is a duplicate");
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  if (coords_ && coords_->size() != static_cast<std::size_t>(num_qubits_)) {
    throw DataError("coords has " + std::to_string(coords_->size()) + " entries, expected " +
                    std::to_string(num_qubits_));
  }
}

void DeviceTopology::check_qubit(int q) const {
  if (q < 0 || q >= num_qubits_) {
    throw DataError("qubit " + std::to_string(q) + " out of range (num_qubits " + std::to_string(num_qubits_) + ")");
  }
}

const std::vector<int>& DeviceTopology::neighbors(int q) const {
  check_qubit(q);
  return adjacency_[static_cast<std::size_t>(q)];
}

bool DeviceTopology::has_edge(int a, int b) const {
  const auto& adj = neighbors(a);
  check_qubit(b);
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool DeviceTopology::connected() const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (int r : adjacency_[static_cast<std::size_t>(q)]) {
      if (!seen[static_cast<std::size_t>(r)]) {
        seen[static_cast<std::size_t>(r)] = true;
        ++reached;
        queue.push_back(r);
      }
    }
  }
  return reached == adjacency_.size();
}

std::vector<int> DeviceTopology::shortest_path(int a, int b) const {
  check_qubit(a);
  check_qubit(b);
  std::vector<int> parent(adjacency_.size(), -1);
  parent[static_cast<std::size_t>(a)] = a;
  std::deque<int> queue{a};
  while (!queue.empty() && parent[static_cast<std::size_t>(b)] < 0) {
    const int q = queue.front();
    queue.pop_front();
    for (int r : adjacency_[static_cast<std::size_t>(q)]) {
      if (parent[static_cast<std::size_t>(r)] < 0) {
        parent[static_cast<std::size_t>(r)] = q;
        queue.push_back(r);
      }
    }
  }
  if (parent[static_cast<std::size_t>(b)] < 0) return {};
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

DeviceTopology DeviceTopology::line(int n) {
  std::vector<std::pair<int, int>> edges;
  std::vector<Point2> coords;
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) edges.emplace_back(i, i + 1);
    coords.push_back({static_cast<double>(i), 0.0});
  }
  return DeviceTopology(n, std::move(edges), std::move(coords));
}

DeviceTopology load_topology(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("topology is not valid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("num_qubits").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DataError("each edge must be a pair [a, b]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::optional<std::vector<Point2>> coords;
    if (doc.contains("coords") && !doc["coords"].is_null()) {
      coords.emplace();
      for (const auto& c : doc["coords"]) {
        if (!c.is_array() || c.size() != 2) throw DataError("each coordinate must be a pair [x, y]");
        coords->push_back({c[0].get<double>(), c[1].get<double>()});
      }
    }
    return DeviceTopology(n, std::move(edges), std::move(coords));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed topology: ") + e.what());
  }
}

std::string topology_to_json(const DeviceTopology& topology) {
  nlohmann::ordered_json doc;
  doc["num_qubits"] = topology.num_qubits();
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : topology.edges()) edges.push_back({a, b});
  if (topology.coords()) {
    auto& coords = doc["coords"] = nlohmann::ordered_json::array();
    for (const auto& p : *topology.coords()) coords.push_back({p.x, p.y});
  }
  return doc.dump();
}

DeviceTopology heavy_hex_127() {
  // Seven rows of linked qubits joined by four bridge qubits between
  // neighbouring rows. Rows 0 and 6 have 14 qubits, rows 1..5 have 15.
  struct Row {
    int first;
    int count;
    int column;  // grid column of the first qubit
  };
  const Row rows[7] = {{0, 14, 0}, {18, 15, 0}, {37, 15, 0}, {56, 15, 0},
                       {75, 15, 0}, {94, 15, 0}, {113, 14, 1}};
  // Bridge qubit ids and the column they sit in, per gap between rows r and r+1.
  const int bridge_first[6] = {14, 33, 52, 71, 90, 109};
  const int bridge_cols[6][4] = {{0, 4, 8, 12}, {2, 6, 10, 14}, {0, 4, 8, 12},
                                 {2, 6, 10, 14}, {0, 4, 8, 12}, {2, 6, 10, 14}};

  std::vector<std::pair<int, int>> edges;
  std::vector<Point2> coords(127);
  const auto at_column = [&](const Row& row, int col) { return row.first + (col - row.column); };
  for (int r = 0; r < 7; ++r) {
    const Row& row = rows[r];
    for (int i = 0; i < row.count; ++i) {
      coords[static_cast<std::size_t>(row.first + i)] = {static_cast<double>(row.column + i), 2.0 * r};
      if (i + 1 < row.count) edges.emplace_back(row.first + i, row.first + i + 1);
    }
    if (r == 6) break;
    for (int b = 0; b < 4; ++b) {
      const int bridge = bridge_first[r] + b;
      const int col = bridge_cols[r][b];
      coords[static_cast<std::size_t>(bridge)] = {static_cast<double>(col), 2.0 * r + 1.0};
      edges.emplace_back(at_column(row, col), bridge);
      edges.emplace_back(bridge, at_column(rows[r + 1], col));
    }
  }
  return DeviceTopology(127, std::move(edges), std::move(coords));
}

}  // namespace qperf
