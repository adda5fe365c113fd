// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qperf/calendar.hpp"
#include "qperf/device_data.hpp"

namespace qperf {

/// Inclusive day range [first, last].
struct TimeRange {
  Day first;
  Day last;
};

struct ValueRange {
  double lo = 0.0;
  double hi = 1.0;
};

struct BinMember {
  int qubit = 0;
  Day day;
  double value = 0.0;

  friend bool operator==(const BinMember&, const BinMember&) = default;
};

/// 2D (time x value) aggregation. Cell (i, j) is time bin i, value bin j and
/// is stored at `i * ny + j`.
///
/// Day d covers the half-open interval [d, d + 1), so a range of days
/// [first, last] spans time edges from first.serial to last.serial + 1 and a
/// point is binned by its day's start.
struct HeatmapGrid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> time_edges;
  std::vector<double> value_edges;
  std::vector<std::size_t> counts;
  std::vector<std::vector<BinMember>> members;
  std::vector<std::optional<double>> medians;

  std::size_t count(std::size_t i, std::size_t j) const { return counts[i * ny + j]; }
  std::size_t total() const;

  friend bool operator==(const HeatmapGrid&, const HeatmapGrid&) = default;
};

inline constexpr int kDefaultValueBins = 32;
inline constexpr int kMaxDefaultTimeBins = 128;

/// min(#days in range, 128).
int default_time_bins(TimeRange range);

/// Bins all present points of `series_set` whose day lies in `time_range`.
/// `value_range` defaults to [min, max] of those points (widened by 0.5 on
/// each side when degenerate); points outside an explicit value range are
/// dropped. Throws DataError when no point is in range or nx/ny < 1.
HeatmapGrid bin2d(std::span<const MetricSeries> series_set, TimeRange time_range, int nx, int ny,
                  std::optional<ValueRange> value_range = std::nullopt);

/// Focus-view grid: bin2d over the selected window with the value axis
/// recomputed from the window's own data. The selection must lie inside the
/// data's day span.
HeatmapGrid refocus(std::span<const MetricSeries> series_set, TimeRange selection, int nx, int ny);

struct BinStats {
  std::size_t count = 0;
  std::optional<double> median;
  std::vector<int> qubits;
};

BinStats bin_stats(const HeatmapGrid& grid, std::size_t i, std::size_t j);

/// Day span covered by the series grid. Throws DataError if the set is empty.
TimeRange data_span(std::span<const MetricSeries> series_set);

}  // namespace qperf
