// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/device_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <string_view>
#include <tuple>

#include <json.hpp>

#include "qperf/error.hpp"

namespace qperf {

namespace {

constexpr std::string_view kCsvHeader = "date,qubit,metric,value";

bool key_less(const CalibrationRecord& a, const CalibrationRecord& b) {
  return std::tie(a.metric, a.qubit, a.date) < std::tie(b.metric, b.qubit, b.date);
}

bool same_key(const CalibrationRecord& a, const CalibrationRecord& b) {
  return a.metric == b.metric && a.qubit == b.qubit && a.date == b.date;
}

std::string describe(const CalibrationRecord& r) {
  return "(" + format_day(r.date) + ", " + std::to_string(r.qubit) + ", " + r.metric + ")";
}

CalibrationRecord parse_row(std::string_view line, std::size_t line_no) {
  const auto fail = [&](const std::string& what) {
    return DataError("line " + std::to_string(line_no) + ": " + what);
  };
  std::string_view fields[4];
  std::size_t n = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (n == 4) throw fail("expected 4 fields");
    fields[n++] = line.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (n != 4) throw fail("expected 4 fields");

  CalibrationRecord rec;
  try {
    rec.date = parse_day(fields[0]);
  } catch (const DataError& e) {
    throw fail(e.what());
  }
  {
    auto [p, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), rec.qubit);
    if (ec != std::errc{} || p != fields[1].data() + fields[1].size() || rec.qubit < 0) {
      throw fail("invalid qubit index '" + std::string(fields[1]) + "'");
    }
  }
  if (fields[2].empty()) throw fail("empty metric");
  rec.metric = std::string(fields[2]);
  {
    auto [p, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), rec.value);
    if (ec != std::errc{} || p != fields[3].data() + fields[3].size()) {
      throw fail("invalid value '" + std::string(fields[3]) + "'");
    }
  }
  if (!std::isfinite(rec.value)) throw fail("non-finite value");
  return rec;
}

}  // namespace

DataStore DataStore::from_records(std::vector<CalibrationRecord> records) {
  for (const auto& r : records) {
    if (!std::isfinite(r.value)) throw DataError("non-finite value for " + describe(r));
    if (r.qubit < 0) throw DataError("negative qubit index for " + describe(r));
    if (r.metric.empty()) throw DataError("empty metric identifier");
  }
  std::stable_sort(records.begin(), records.end(), key_less);
  const auto dup = std::adjacent_find(records.begin(), records.end(), same_key);
  if (dup != records.end()) throw DataError("duplicate record " + describe(*dup));
  DataStore store;
  store.records_ = std::move(records);
  return store;
}

std::vector<std::string> DataStore::metrics() const {
  std::vector<std::string> out;
  for (const auto& r : records_) {
    if (out.empty() || out.back() != r.metric) out.push_back(r.metric);
  }
  return out;
}

bool DataStore::has_metric(const std::string& metric) const {
  const auto it = std::lower_bound(records_.begin(), records_.end(), metric,
                                   [](const CalibrationRecord& r, const std::string& m) { return r.metric < m; });
  return it != records_.end() && it->metric == metric;
}

DataStore ingest_csv(std::istream& source) {
  std::vector<CalibrationRecord> records;
  std::map<std::tuple<std::string, int, std::int32_t>, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == kCsvHeader) continue;
    CalibrationRecord rec = parse_row(line, line_no);
    auto [it, inserted] = seen.try_emplace({rec.metric, rec.qubit, rec.date.serial}, line_no);
    if (!inserted) {
      throw DataError("line " + std::to_string(line_no) + ": duplicate record " + describe(rec) +
                      " (first seen on line " + std::to_string(it->second) + ")");
    }
    records.push_back(std::move(rec));
  }
  return DataStore::from_records(std::move(records));
}

std::string store_to_json(const DataStore& store, const std::string& source_name) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  nlohmann::ordered_json provenance;
  provenance["generator"] = "qperf";
  if (!source_name.empty()) provenance["source"] = source_name;
  provenance["record_count"] = store.size();
  doc["provenance"] = std::move(provenance);
  auto& records = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : store.records()) {
    records.push_back({{"date", format_day(r.date)}, {"qubit", r.qubit}, {"metric", r.metric}, {"value", r.value}});
  }
  return doc.dump();
}

DataStore store_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("store is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1) throw DataError("unsupported store version");
    std::vector<CalibrationRecord> records;
    for (const auto& r : doc.at("records")) {
      records.push_back({parse_day(r.at("date").get<std::string>()), r.at("qubit").get<int>(),
                         r.at("metric").get<std::string>(), r.at("value").get<double>()});
    }
    return DataStore::from_records(std::move(records));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed store: ") + e.what());
  }
}

std::size_t MetricSeries::present_count() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](const auto& v) { return v.has_value(); }));
}

std::vector<MetricSeries> build_series(const DataStore& store, const std::string& metric) {
  const auto& recs = store.records();
  const auto first = std::lower_bound(recs.begin(), recs.end(), metric,
                                      [](const CalibrationRecord& r, const std::string& m) { return r.metric < m; });
  auto last = first;
  while (last != recs.end() && last->metric == metric) ++last;
  if (first == last) throw NotFoundError("unknown metric '" + metric + "'");

  std::set<Day> days;
  for (auto it = first; it != last; ++it) days.insert(it->date);
  const std::vector<Day> grid(days.begin(), days.end());

  std::vector<MetricSeries> out;
  for (auto it = first; it != last; ++it) {
    if (out.empty() || out.back().qubit != it->qubit) {
      out.push_back({it->qubit, metric, grid, std::vector<std::optional<double>>(grid.size())});
    }
    const auto pos = std::lower_bound(grid.begin(), grid.end(), it->date) - grid.begin();
    out.back().values[static_cast<std::size_t>(pos)] = it->value;
  }
  return out;
}

std::optional<std::size_t> locate_bin(const std::vector<double>& edges, double v) {
  const std::size_t n = edges.size() - 1;
  const double lo = edges.front();
  const double hi = edges.back();
  if (!(v >= lo && v <= hi)) return std::nullopt;
  if (v == hi) return n - 1;
  const double t = (v - lo) / (hi - lo) * static_cast<double>(n);
  auto idx = static_cast<std::size_t>(std::min(std::max(t, 0.0), static_cast<double>(n - 1)));
  while (idx > 0 && v < edges[idx]) --idx;
  while (idx + 1 < n && v >= edges[idx + 1]) ++idx;
  return idx;
}

Histogram1D metric_histogram(const MetricSeries& series, int bin_count) {
  if (bin_count < 1) throw DataError("bin_count must be >= 1");
  std::vector<double> present;
  for (const auto& v : series.values) {
    if (v) present.push_back(*v);
  }
  if (present.empty()) throw DataError("series has no present values");
  const auto [mn, mx] = std::minmax_element(present.begin(), present.end());
  double lo = *mn;
  double hi = *mx;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  Histogram1D hist;
  const auto n = static_cast<std::size_t>(bin_count);
  hist.edges.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    hist.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
  }
  hist.edges[n] = hi;
  hist.counts.assign(n, 0);
  for (double v : present) {
    if (auto b = locate_bin(hist.edges, v)) ++hist.counts[*b];
  }
  return hist;
}

std::optional<double> median_of(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

SeriesSummary series_summary(const MetricSeries& series) {
  SeriesSummary s;
  std::vector<double> present;
  for (const auto& v : series.values) {
    if (v) {
      present.push_back(*v);
    } else {
      ++s.missing;
    }
  }
  s.count = present.size();
  if (present.empty()) return s;
  const auto [mn, mx] = std::minmax_element(present.begin(), present.end());
  s.min = *mn;
  s.max = *mx;
  double sum = 0.0;
  for (double v : present) sum += v;
  s.mean = sum / static_cast<double>(present.size());
  s.median = median_of(std::move(present));
  return s;
}

}  // namespace qperf
