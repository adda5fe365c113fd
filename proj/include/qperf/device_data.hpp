// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "qperf/calendar.hpp"

namespace qperf {

/// One published calibration value: (day, qubit, metric) -> value.
struct CalibrationRecord {
  Day date;
  int qubit = 0;
  std::string metric;
  double value = 0.0;

  friend bool operator==(const CalibrationRecord&, const CalibrationRecord&) = default;
};

/// Immutable collection of calibration records with a unique
/// (date, qubit, metric) key. Records are kept sorted by (metric, qubit, date).
class DataStore {
 public:
  DataStore() = default;

  /// Validates and sorts. Throws DataError on a non-finite value, a negative
  /// qubit index or a duplicate key.
  static DataStore from_records(std::vector<CalibrationRecord> records);

  const std::vector<CalibrationRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  /// Distinct metric identifiers, sorted.
  std::vector<std::string> metrics() const;
  bool has_metric(const std::string& metric) const;

 private:
  std::vector<CalibrationRecord> records_;
};

/// Parses `date,qubit,metric,value` rows (header optional). Errors carry the
/// 1-based line number.
DataStore ingest_csv(std::istream& source);

/// Store file: `{"version":1,"records":[...]}` plus an optional provenance
/// object that readers ignore.
std::string store_to_json(const DataStore& store, const std::string& source_name = {});
DataStore store_from_json(const std::string& text);

/// One qubit's daily values for one metric, aligned to a shared day grid.
struct MetricSeries {
  int qubit = 0;
  std::string metric;
  std::vector<Day> grid;
  std::vector<std::optional<double>> values;

  std::size_t present_count() const;
};

/// One series per qubit (ascending qubit order) on the union date grid of the
/// metric. Throws NotFoundError for an unknown metric.
std::vector<MetricSeries> build_series(const DataStore& store, const std::string& metric);

struct Histogram1D {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
};

/// Uniform bins over [min, max] of the present values; half-open bins with the
/// last one closed. A zero-width range is widened to [v - 0.5, v + 0.5].
Histogram1D metric_histogram(const MetricSeries& series, int bin_count);

/// Index of the bin holding `v` for uniform `edges`, or nullopt when outside.
/// Consistent with the edge values themselves, so a value equal to an interior
/// edge always lands in the bin on its right.
std::optional<std::size_t> locate_bin(const std::vector<double>& edges, double v);

struct SeriesSummary {
  std::size_t count = 0;
  std::size_t missing = 0;
  std::optional<double> min;
  std::optional<double> max;
  std::optional<double> mean;
  std::optional<double> median;
};

SeriesSummary series_summary(const MetricSeries& series);

/// Median of an unsorted sample (mean of the two middle values for even
/// sizes). Empty input yields nullopt.
std::optional<double> median_of(std::vector<double> values);

}  // namespace qperf
