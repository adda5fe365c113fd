// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qperf/error.hpp"
#include "qperf/random.hpp"
#include "qperf/simd/kernels.hpp"

namespace qperf {

namespace {

void require_equal_lengths(const std::vector<Series>& set) {
  for (const auto& s : set) {
    if (s.size() != set.front().size()) {
      throw DataError("series lengths differ: " + std::to_string(set.front().size()) + " vs " +
                      std::to_string(s.size()));
    }
  }
}

Series barycenter_of(const std::vector<Series>& members, const DistanceMetric& metric) {
  if (metric.kind == DistanceKind::euclidean) return euclidean_barycenter(members);
  return dba_barycenter(members, kDefaultDbaIterations, metric.dtw_band);
}

struct Assignment {
  std::vector<int> cluster;
  std::vector<double> dist;  // distance to the assigned barycenter
};

Assignment assign(const std::vector<Series>& data, const std::vector<Series>& centers, const DistanceMetric& metric) {
  Assignment a{std::vector<int>(data.size()), std::vector<double>(data.size())};
  for (std::size_t i = 0; i < data.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    int best_c = 0;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const double d = distance(data[i], centers[c], metric);
      if (d < best) {
        best = d;
        best_c = static_cast<int>(c);
      }
    }
    a.cluster[i] = best_c;
    a.dist[i] = best;
  }
  return a;
}

/// Gives each empty cluster the point farthest from its own barycenter, taken
/// from a cluster that keeps at least one member.
void repair_empty(const std::vector<Series>& data, std::vector<Series>& centers, Assignment& a) {
  const std::size_t k = centers.size();
  std::vector<std::size_t> sizes(k, 0);
  for (int c : a.cluster) ++sizes[static_cast<std::size_t>(c)];
  for (std::size_t e = 0; e < k; ++e) {
    if (sizes[e] != 0) continue;
    std::size_t pick = data.size();
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (sizes[static_cast<std::size_t>(a.cluster[i])] < 2) continue;
      if (pick == data.size() || a.dist[i] > a.dist[pick]) pick = i;
    }
    // n >= k guarantees a donor cluster with two or more members.
    --sizes[static_cast<std::size_t>(a.cluster[pick])];
    ++sizes[e];
    a.cluster[pick] = static_cast<int>(e);
    a.dist[pick] = 0.0;
    centers[e] = data[pick];
  }
}

double inertia_of(const Assignment& a) {
  double sum = 0.0;
  for (double d : a.dist) sum += d * d;
  return sum;
}

std::vector<Series> kmeans_plus_plus(const std::vector<Series>& data, std::size_t k, const DistanceMetric& metric,
                                     Rng& rng) {
  const std::size_t n = data.size();
  std::vector<bool> chosen(n, false);
  std::vector<Series> centers;
  std::size_t first = rng.below(n);
  chosen[first] = true;
  centers.push_back(data[first]);

  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  std::size_t latest = first;
  while (centers.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = distance(data[i], data[latest], metric);
      d2[i] = std::min(d2[i], d * d);
      total += d2[i];
    }
    std::size_t pick = n;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double running = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (d2[i] <= 0.0) continue;
        running += d2[i];
        pick = i;
        if (running > target) break;
      }
    } else {
      // Every point coincides with a chosen center; fall back to index order.
      for (std::size_t i = 0; i < n && pick == n; ++i) {
        if (!chosen[i]) pick = i;
      }
    }
    chosen[pick] = true;
    centers.push_back(data[pick]);
    latest = pick;
  }
  return centers;
}

}  // namespace

Series euclidean_barycenter(const std::vector<Series>& members) {
  if (members.empty()) throw DataError("barycenter of an empty set");
  require_equal_lengths(members);
  Series mean(members.front().size(), 0.0);
  for (const auto& m : members) simd::accumulate(mean, m);
  simd::scale(mean, 1.0 / static_cast<double>(members.size()));
  return mean;
}

Series dba_barycenter(const std::vector<Series>& members, int iterations, std::optional<int> band) {
  if (members.empty()) throw DataError("barycenter of an empty set");
  const std::size_t n = members.size();

  std::size_t medoid = 0;
  if (n > 1) {
    std::vector<double> sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = dtw_distance(members[i], members[j], band);
        sums[i] += d;
        sums[j] += d;
      }
    }
    medoid = static_cast<std::size_t>(std::min_element(sums.begin(), sums.end()) - sums.begin());
  }

  Series center = members[medoid];
  std::vector<double> acc(center.size());
  std::vector<std::size_t> hits(center.size());
  for (int it = 0; it < iterations; ++it) {
    std::fill(acc.begin(), acc.end(), 0.0);
    std::fill(hits.begin(), hits.end(), 0);
    for (const auto& m : members) {
      for (const auto& [ci, mj] : dtw_path(center, m, band)) {
        acc[ci] += m[mj];
        ++hits[ci];
      }
    }
    double moved = 0.0;
    for (std::size_t i = 0; i < center.size(); ++i) {
      const double next = acc[i] / static_cast<double>(hits[i]);
      moved = std::max(moved, std::abs(next - center[i]));
      center[i] = next;
    }
    if (moved < kDbaTolerance) break;
  }
  return center;
}

ClusterResult kmeans_timeseries(const std::vector<Series>& series_set, int k, const DistanceMetric& metric,
                                std::uint64_t seed, int max_iter) {
  if (k < 1) throw DataError("k must be >= 1");
  if (series_set.size() < static_cast<std::size_t>(k)) {
    throw DataError("k exceeds series count (" + std::to_string(k) + " > " + std::to_string(series_set.size()) + ")");
  }
  if (metric.kind == DistanceKind::dtw && metric.dtw_band && *metric.dtw_band < 0) {
    throw DataError("dtw band must be >= 0");
  }
  require_equal_lengths(series_set);

  const auto kk = static_cast<std::size_t>(k);
  Rng rng(seed);
  ClusterResult result;
  result.k = k;
  result.metric = metric;
  result.seed = seed;

  std::vector<Series> centers = kmeans_plus_plus(series_set, kk, metric, rng);
  Assignment current = assign(series_set, centers, metric);
  repair_empty(series_set, centers, current);
  result.inertia_history.push_back(inertia_of(current));

  for (int it = 0; it < max_iter; ++it) {
    std::vector<std::vector<Series>> groups(kk);
    for (std::size_t i = 0; i < series_set.size(); ++i) {
      groups[static_cast<std::size_t>(current.cluster[i])].push_back(series_set[i]);
    }
    for (std::size_t c = 0; c < kk; ++c) centers[c] = barycenter_of(groups[c], metric);

    Assignment next = assign(series_set, centers, metric);
    repair_empty(series_set, centers, next);
    result.inertia_history.push_back(inertia_of(next));
    ++result.iterations;
    const bool stable = next.cluster == current.cluster;
    current = std::move(next);
    if (stable) break;
  }

  result.assignments = std::move(current.cluster);
  result.barycenters = std::move(centers);
  result.inertia = result.inertia_history.back();
  return result;
}

DistanceMatrix distance_matrix(const std::vector<Series>& series_set, const DistanceMetric& metric) {
  if (series_set.empty()) throw DataError("distance matrix of an empty set");
  DistanceMatrix m;
  m.n = series_set.size();
  m.d.assign(m.n * m.n, 0.0);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = i + 1; j < m.n; ++j) {
      const double d = distance(series_set[i], series_set[j], metric);
      m.d[i * m.n + j] = d;
      m.d[j * m.n + i] = d;
    }
  }
  return m;
}

}  // namespace qperf
