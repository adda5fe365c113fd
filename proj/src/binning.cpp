// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/binning.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qperf/error.hpp"

namespace qperf {

namespace {

std::vector<double> uniform_edges(double lo, double hi, std::size_t n) {
  std::vector<double> edges(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
  }
  edges[n] = hi;
  return edges;
}

}  // namespace

std::size_t HeatmapGrid::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

int default_time_bins(TimeRange range) {
  const int days = range.last.serial - range.first.serial + 1;
  return std::clamp(days, 1, kMaxDefaultTimeBins);
}

TimeRange data_span(std::span<const MetricSeries> series_set) {
  bool any = false;
  TimeRange span{};
  for (const auto& s : series_set) {
    if (s.grid.empty()) continue;
    if (!any) {
      span = {s.grid.front(), s.grid.back()};
      any = true;
    } else {
      span.first = std::min(span.first, s.grid.front());
      span.last = std::max(span.last, s.grid.back());
    }
  }
  if (!any) throw DataError("no series data");
  return span;
}

HeatmapGrid bin2d(std::span<const MetricSeries> series_set, TimeRange time_range, int nx, int ny,
                  std::optional<ValueRange> value_range) {
  if (nx < 1 || ny < 1) throw DataError("nx and ny must be >= 1");
  if (time_range.last < time_range.first) throw DataError("time range is empty");

  std::vector<BinMember> points;
  for (const auto& s : series_set) {
    for (std::size_t k = 0; k < s.grid.size(); ++k) {
      const Day d = s.grid[k];
      if (d < time_range.first || time_range.last < d || !s.values[k]) continue;
      points.push_back({s.qubit, d, *s.values[k]});
    }
  }

  double lo = 0.0, hi = 0.0;
  if (value_range) {
    lo = value_range->lo;
    hi = value_range->hi;
    if (!(lo < hi)) throw DataError("value range must satisfy lo < hi");
  } else {
    if (points.empty()) throw DataError("no data points in the selected range");
    const auto [mn, mx] = std::minmax_element(points.begin(), points.end(),
                                              [](const BinMember& a, const BinMember& b) { return a.value < b.value; });
    lo = mn->value;
    hi = mx->value;
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }

  HeatmapGrid grid;
  grid.nx = static_cast<std::size_t>(nx);
  grid.ny = static_cast<std::size_t>(ny);
  grid.time_edges = uniform_edges(time_range.first.serial, time_range.last.serial + 1.0, grid.nx);
  grid.value_edges = uniform_edges(lo, hi, grid.ny);
  grid.counts.assign(grid.nx * grid.ny, 0);
  grid.members.assign(grid.nx * grid.ny, {});

  std::size_t placed = 0;
  for (const auto& p : points) {
    const auto j = locate_bin(grid.value_edges, p.value);
    if (!j) continue;
    const auto i = locate_bin(grid.time_edges, static_cast<double>(p.day.serial));
    const std::size_t cell = *i * grid.ny + *j;
    ++grid.counts[cell];
    grid.members[cell].push_back(p);
    ++placed;
  }
  if (placed == 0) throw DataError("no data points in the selected range");

  grid.medians.resize(grid.counts.size());
  for (std::size_t c = 0; c < grid.members.size(); ++c) {
    std::vector<double> values;
    values.reserve(grid.members[c].size());
    for (const auto& m : grid.members[c]) values.push_back(m.value);
    grid.medians[c] = median_of(std::move(values));
  }
  return grid;
}

HeatmapGrid refocus(std::span<const MetricSeries> series_set, TimeRange selection, int nx, int ny) {
  const TimeRange span = data_span(series_set);
  if (selection.last < selection.first) throw DataError("focus selection has t_start > t_end");
  if (selection.first < span.first || span.last < selection.last) {
    throw DataError("focus selection " + format_day(selection.first) + ".." + format_day(selection.last) +
                    " lies outside the data span " + format_day(span.first) + ".." + format_day(span.last));
  }
  return bin2d(series_set, selection, nx, ny, std::nullopt);
}

BinStats bin_stats(const HeatmapGrid& grid, std::size_t i, std::size_t j) {
  if (i >= grid.nx || j >= grid.ny) {
    throw DataError("bin (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  }
  const std::size_t cell = i * grid.ny + j;
  BinStats stats;
  stats.count = grid.counts[cell];
  std::set<int> qubits;
  std::vector<double> values;
  for (const auto& m : grid.members[cell]) {
    qubits.insert(m.qubit);
    values.push_back(m.value);
  }
  stats.qubits.assign(qubits.begin(), qubits.end());
  stats.median = median_of(std::move(values));
  return stats;
}

}  // namespace qperf
