// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Independent reference implementations used to check the library. None of
// these share code with src/.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "qperf/circuit.hpp"
#include "qperf/unitary.hpp"

namespace qperf::test {

namespace detail {

inline void enumerate_paths(const std::vector<double>& a, const std::vector<double>& b, std::size_t i,
                            std::size_t j, double acc, double& best, std::size_t& paths) {
  const double d = a[i] - b[j];
  acc += d * d;
  if (i + 1 == a.size() && j + 1 == b.size()) {
    ++paths;
    best = std::min(best, acc);
    return;
  }
  if (i + 1 < a.size() && j + 1 < b.size()) enumerate_paths(a, b, i + 1, j + 1, acc, best, paths);
  if (i + 1 < a.size()) enumerate_paths(a, b, i + 1, j, acc, best, paths);
  if (j + 1 < b.size()) enumerate_paths(a, b, i, j + 1, acc, best, paths);
}

}  // namespace detail

/// Minimum over every monotone alignment path of sqrt(sum of squared costs).
inline double brute_force_dtw(const std::vector<double>& a, const std::vector<double>& b,
                              std::size_t* path_count = nullptr) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t paths = 0;
  detail::enumerate_paths(a, b, 0, 0, 0.0, best, paths);
  if (path_count) *path_count = paths;
  return std::sqrt(best);
}

/// Squared cost of one explicit alignment path.
inline double path_cost(const std::vector<double>& a, const std::vector<double>& b,
                        const std::vector<std::pair<std::size_t, std::size_t>>& path) {
  double s = 0.0;
  for (auto [i, j] : path) s += (a[i] - b[j]) * (a[i] - b[j]);
  return s;
}

/// Adjusted Rand index from the contingency table (Hubert and Arabie).
inline double adjusted_rand_index(const std::vector<int>& x, const std::vector<int>& y) {
  const auto choose2 = [](double n) { return n * (n - 1.0) / 2.0; };
  std::map<std::pair<int, int>, double> table;
  std::map<int, double> rows, cols;
  for (std::size_t i = 0; i < x.size(); ++i) {
    table[{x[i], y[i]}] += 1.0;
    rows[x[i]] += 1.0;
    cols[y[i]] += 1.0;
  }
  double index = 0.0, a = 0.0, b = 0.0;
  for (const auto& [key, n] : table) index += choose2(n);
  for (const auto& [key, n] : rows) a += choose2(n);
  for (const auto& [key, n] : cols) b += choose2(n);
  const double expected = a * b / choose2(static_cast<double>(x.size()));
  const double max_index = (a + b) / 2.0;
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

/// Median by full sort: middle element, or mean of the two middle elements.
inline double sort_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

/// Longest path through the explicit dependency DAG: op j depends on every
/// earlier op sharing a qubit or clbit with it. Barriers weigh 0, other ops 1.
inline std::size_t dag_depth(const Circuit& c) {
  const auto& ops = c.ops();
  const auto shares_wire = [](const Instruction& p, const Instruction& q) {
    for (int a : p.qubits) {
      if (std::find(q.qubits.begin(), q.qubits.end(), a) != q.qubits.end()) return true;
    }
    for (int a : p.clbits) {
      if (std::find(q.clbits.begin(), q.clbits.end(), a) != q.clbits.end()) return true;
    }
    return false;
  };
  std::vector<std::size_t> longest(ops.size(), 0);
  std::size_t best = 0;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    std::size_t before = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (shares_wire(ops[i], ops[j])) before = std::max(before, longest[i]);
    }
    longest[j] = before + (ops[j].kind == GateKind::barrier ? 0 : 1);
    best = std::max(best, longest[j]);
  }
  return best;
}

/// Permutation taking basis state b to the state whose bit layout[q] equals
/// bit q of b.
inline Matrix permutation_matrix(const std::vector<int>& layout) {
  const std::size_t dim = std::size_t{1} << layout.size();
  Matrix p(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t image = 0;
    for (std::size_t q = 0; q < layout.size(); ++q) {
      if ((b >> q) & 1U) image |= std::size_t{1} << layout[q];
    }
    p(image, b) = 1.0;
  }
  return p;
}

/// Same circuit over `width` qubits.
inline Circuit widen(const Circuit& c, int width) {
  Circuit out(width, c.num_clbits());
  for (const auto& op : c.ops()) out.append(op);
  return out;
}

/// All-pairs hop distances (Floyd-Warshall); -1 marks unreachable pairs.
inline std::vector<std::vector<int>> hop_distances(int n, const std::vector<std::pair<int, int>>& edges) {
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : edges) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (int& v : row) {
      if (v >= inf) v = -1;
    }
  }
  return d;
}

}  // namespace qperf::test
