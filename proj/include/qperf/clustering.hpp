// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qperf/distance.hpp"

namespace qperf {

using Series = std::vector<double>;

inline constexpr int kDefaultClusters = 6;
inline constexpr int kDefaultKMeansIterations = 100;
inline constexpr int kDefaultDbaIterations = 10;
inline constexpr double kDbaTolerance = 1e-9;

struct ClusterResult {
  int k = 0;
  DistanceMetric metric;
  std::uint64_t seed = 0;
  std::vector<int> assignments;
  std::vector<Series> barycenters;
  double inertia = 0.0;
  int iterations = 0;
  /// Inertia after every assignment step, first entry from the initial seeding.
  std::vector<double> inertia_history;
};

struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> d;  // row-major n x n

  double at(std::size_t i, std::size_t j) const { return d[i * n + j]; }
};

/// Pointwise arithmetic mean. Throws DataError on an empty set or unequal lengths.
Series euclidean_barycenter(const std::vector<Series>& members);

/// DTW barycenter averaging, started from the medoid (lowest index on ties).
/// Stops after `iterations` refinements or once no point moves by more than
/// 1e-9.
Series dba_barycenter(const std::vector<Series>& members, int iterations = kDefaultDbaIterations,
                      std::optional<int> band = std::nullopt);

/// Seeded k-means++ / Lloyd iteration over equal-length series. DTW uses DBA
/// barycenters. Ties go to the lowest cluster id; empty clusters take the
/// point farthest from its own barycenter.
ClusterResult kmeans_timeseries(const std::vector<Series>& series_set, int k,
                                const DistanceMetric& metric, std::uint64_t seed,
                                int max_iter = kDefaultKMeansIterations);

/// All-pairs distances, each unordered pair evaluated once.
DistanceMatrix distance_matrix(const std::vector<Series>& series_set, const DistanceMetric& metric);

}  // namespace qperf
