// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/wire.hpp"

namespace qperf::wire {

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json series_set(const std::vector<MetricSeries>& series) {
  Json out = Json::array();
  for (const auto& s : series) {
    Json grid = Json::array();
    for (Day d : s.grid) grid.push_back(format_day(d));
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(optional_number(v));
    out.push_back({{"qubit", s.qubit}, {"grid", std::move(grid)}, {"values", std::move(values)}});
  }
  return out;
}

Json histogram(const Histogram1D& hist) {
  return {{"edges", hist.edges}, {"counts", hist.counts}};
}

Json grid(const HeatmapGrid& g, bool include_members) {
  Json counts = Json::array();
  Json medians = Json::array();
  Json members = Json::array();
  for (std::size_t i = 0; i < g.nx; ++i) {
    Json crow = Json::array();
    Json mrow = Json::array();
    Json brow = Json::array();
    for (std::size_t j = 0; j < g.ny; ++j) {
      const std::size_t cell = i * g.ny + j;
      crow.push_back(g.counts[cell]);
      mrow.push_back(optional_number(g.medians[cell]));
      if (include_members) {
        Json bin = Json::array();
        for (const auto& m : g.members[cell]) {
          bin.push_back({{"qubit", m.qubit}, {"date", format_day(m.day)}, {"value", m.value}});
        }
        brow.push_back(std::move(bin));
      }
    }
    counts.push_back(std::move(crow));
    medians.push_back(std::move(mrow));
    if (include_members) members.push_back(std::move(brow));
  }
  Json out = {{"time_edges", g.time_edges}, {"value_edges", g.value_edges}, {"counts", std::move(counts)},
              {"medians", std::move(medians)}};
  if (include_members) out["members"] = std::move(members);
  return out;
}

Json cluster(const ClusterResult& r, const std::vector<int>& qubits) {
  Json out = {{"k", r.k},
              {"metric", std::string(distance_name(r.metric.kind))},
              {"seed", r.seed},
              {"assignments", r.assignments},
              {"barycenters", r.barycenters},
              {"inertia", r.inertia},
              {"iterations", r.iterations},
              {"qubits", qubits}};
  if (r.metric.kind == DistanceKind::dtw && r.metric.dtw_band) out["band"] = *r.metric.dtw_band;
  return out;
}

Json matrix(const DistanceMatrix& m, const std::vector<int>& qubits) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    rows.push_back(std::vector<double>(m.d.begin() + static_cast<std::ptrdiff_t>(i * m.n),
                                       m.d.begin() + static_cast<std::ptrdiff_t>((i + 1) * m.n)));
  }
  return {{"n", m.n}, {"d", std::move(rows)}, {"qubits", qubits}};
}

Json report(const OptimizationReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"level", l.level}, {"depth", l.depth}, {"single", l.single}, {"multi", l.multi}, {"qasm", l.qasm}});
  }
  return {{"input", {{"depth", r.input_depth}, {"single", r.input_single}, {"multi", r.input_multi}}},
          {"levels", std::move(levels)},
          {"layout", r.layout ? Json(*r.layout) : Json(nullptr)}};
}

Json topology(const DeviceTopology& t) { return Json::parse(topology_to_json(t)); }

}  // namespace qperf::wire
