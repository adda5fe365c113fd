// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qperf/device_data.hpp"

namespace qperf {

enum class DistanceKind { euclidean, dtw };

struct DistanceMetric {
  DistanceKind kind = DistanceKind::euclidean;
  /// Sakoe-Chiba half-width. Ignored for euclidean.
  std::optional<int> dtw_band;

  static DistanceMetric euclidean() { return {}; }
  static DistanceMetric dtw(std::optional<int> band = std::nullopt) {
    return {DistanceKind::dtw, band};
  }
};

std::string_view distance_name(DistanceKind kind);
/// "euclidean" or "dtw"; throws DataError otherwise.
DistanceKind parse_distance(std::string_view name);

/// sqrt(sum (a_i - b_i)^2). Throws DataError on a length mismatch or a NaN
/// (absent) entry.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Dynamic time warping with squared pointwise cost, square-rooted. Steps
/// (i-1, j), (i, j-1), (i-1, j-1); `band` restricts |i - j| <= band.
double dtw_distance(std::span<const double> a, std::span<const double> b,
                    std::optional<int> band = std::nullopt);

/// Optimal warping path from (0, 0) to (|a|-1, |b|-1). When several
/// predecessors tie, backtracking prefers the diagonal, then (i-1, j), then
/// (i, j-1).
std::vector<std::pair<std::size_t, std::size_t>> dtw_path(std::span<const double> a,
                                                          std::span<const double> b,
                                                          std::optional<int> band = std::nullopt);

double distance(std::span<const double> a, std::span<const double> b, const DistanceMetric& metric);

/// Absent days become NaN unless `impute` is set, in which case they are
/// linearly interpolated between the nearest present neighbours and held flat
/// past either end. `znorm` maps present values to mean 0, population sd 1;
/// a constant series maps to zeros.
std::vector<double> preprocess_series(const MetricSeries& series, bool impute, bool znorm);

}  // namespace qperf
