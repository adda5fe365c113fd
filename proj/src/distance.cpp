// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "qperf/error.hpp"
#include "qperf/simd/kernels.hpp"

namespace qperf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_present(std::span<const double> s, const char* name) {
  for (double v : s) {
    if (std::isnan(v)) throw DataError(std::string("series ") + name + " contains an absent value");
  }
}

struct BandLimits {
  std::size_t lo;
  std::size_t hi;  // inclusive
};

/// Columns of row i that lie inside the band (and the matrix).
BandLimits band_limits(std::size_t i, std::size_t m, std::optional<int> band) {
  if (!band) return {0, m - 1};
  const auto w = static_cast<std::size_t>(*band);
  const std::size_t lo = i > w ? i - w : 0;
  const std::size_t hi = std::min(m - 1, i + w);
  return {lo, hi};
}

void check_dtw_inputs(std::span<const double> a, std::span<const double> b, std::optional<int> band) {
  if (a.empty() || b.empty()) throw DataError("dtw requires non-empty series");
  if (band && *band < 0) throw DataError("dtw band must be >= 0");
  require_present(a, "a");
  require_present(b, "b");
  if (band) {
    const auto gap = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
    if (gap > static_cast<std::size_t>(*band)) {
      throw DataError("dtw band " + std::to_string(*band) + " cannot reach the end cell for lengths " +
                      std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
  }
}

/// Fills `cur` (m entries) from the previous row `prev` (m + 1 entries, see
/// KernelTable::dtw_row_terms). Cells outside the band are +inf.
void dtw_row(const simd::KernelTable& k, double x, std::span<const double> b, const std::vector<double>& prev,
             BandLimits lim, std::vector<double>& cost, std::vector<double>& up, double* cur) {
  const std::size_t m = b.size();
  const std::size_t width = lim.hi - lim.lo + 1;
  k.dtw_row_terms(x, b.data() + lim.lo, prev.data() + lim.lo, cost.data(), up.data(), width);
  std::fill(cur, cur + lim.lo, kInf);
  double left = kInf;
  for (std::size_t j = 0; j < width; ++j) {
    left = cost[j] + std::min(up[j], left);
    cur[lim.lo + j] = left;
  }
  std::fill(cur + lim.hi + 1, cur + m, kInf);
}

}  // namespace

std::string_view distance_name(DistanceKind kind) {
  return kind == DistanceKind::euclidean ? "euclidean" : "dtw";
}

DistanceKind parse_distance(std::string_view name) {
  if (name == "euclidean") return DistanceKind::euclidean;
  if (name == "dtw") return DistanceKind::dtw;
  throw DataError("unknown distance '" + std::string(name) + "' (expected euclidean or dtw)");
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DataError("length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  require_present(a, "a");
  require_present(b, "b");
  return std::sqrt(simd::squared_l2(a, b));
}

double dtw_distance(std::span<const double> a, std::span<const double> b, std::optional<int> band) {
  check_dtw_inputs(a, b, band);
  const auto& k = simd::active_kernels();
  const std::size_t m = b.size();
  std::vector<double> prev(m + 1, kInf);
  std::vector<double> cur(m);
  std::vector<double> cost(m), up(m);
  prev[0] = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dtw_row(k, a[i], b, prev, band_limits(i, m, band), cost, up, cur.data());
    prev[0] = kInf;
    std::copy(cur.begin(), cur.end(), prev.begin() + 1);
  }
  return std::sqrt(prev[m]);
}

std::vector<std::pair<std::size_t, std::size_t>> dtw_path(std::span<const double> a, std::span<const double> b,
                                                          std::optional<int> band) {
  check_dtw_inputs(a, b, band);
  const auto& k = simd::active_kernels();
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<double> acc(n * m);
  std::vector<double> prev(m + 1, kInf);
  std::vector<double> cost(m), up(m);
  prev[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double* row = acc.data() + i * m;
    dtw_row(k, a[i], b, prev, band_limits(i, m, band), cost, up, row);
    prev[0] = kInf;
    std::copy(row, row + m, prev.begin() + 1);
  }

  std::vector<std::pair<std::size_t, std::size_t>> path;
  std::size_t i = n - 1, j = m - 1;
  path.emplace_back(i, j);
  while (i > 0 || j > 0) {
    if (i == 0) {
      --j;
    } else if (j == 0) {
      --i;
    } else {
      const double diag = acc[(i - 1) * m + (j - 1)];
      const double above = acc[(i - 1) * m + j];
      const double left = acc[i * m + (j - 1)];
      if (diag <= above && diag <= left) {
        --i;
        --j;
      } else if (above <= left) {
        --i;
      } else {
        --j;
      }
    }
    path.emplace_back(i, j);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

double distance(std::span<const double> a, std::span<const double> b, const DistanceMetric& metric) {
  if (metric.kind == DistanceKind::euclidean) return euclidean_distance(a, b);
  return dtw_distance(a, b, metric.dtw_band);
}

std::vector<double> preprocess_series(const MetricSeries& series, bool impute, bool znorm) {
  const std::size_t n = series.values.size();
  std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < n; ++i) {
    if (series.values[i]) {
      out[i] = *series.values[i];
      present.push_back(i);
    }
  }
  if (impute) {
    if (present.size() < 2) {
      throw DataError("qubit " + std::to_string(series.qubit) + ": imputation needs at least 2 present values");
    }
    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(present.front()), out[present.front()]);
    std::fill(out.begin() + static_cast<std::ptrdiff_t>(present.back()) + 1, out.end(), out[present.back()]);
    for (std::size_t p = 0; p + 1 < present.size(); ++p) {
      const std::size_t l = present[p];
      const std::size_t r = present[p + 1];
      for (std::size_t i = l + 1; i < r; ++i) {
        const double t = static_cast<double>(i - l) / static_cast<double>(r - l);
        out[i] = out[l] + t * (out[r] - out[l]);
      }
    }
  }
  if (znorm) {
    double sum = 0.0;
    std::size_t count = 0;
    for (double v : out) {
      if (!std::isnan(v)) {
        sum += v;
        ++count;
      }
    }
    if (count == 0) return out;
    const double mean = sum / static_cast<double>(count);
    double ss = 0.0;
    for (double v : out) {
      if (!std::isnan(v)) ss += (v - mean) * (v - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(count));
    // Rounding leaves a tiny spread on constant inputs such as {0.1, 0.1, 0.1}.
    const bool constant = sd <= 1e-12 * std::max(1.0, std::abs(mean));
    for (double& v : out) {
      if (std::isnan(v)) continue;
      v = constant ? 0.0 : (v - mean) / sd;
    }
  }
  return out;
}

}  // namespace qperf
