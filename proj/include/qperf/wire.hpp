// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <json.hpp>

#include "qperf/binning.hpp"
#include "qperf/clustering.hpp"
#include "qperf/device_data.hpp"
#include "qperf/optimizer.hpp"
#include "qperf/topology.hpp"

// JSON wire forms shared by the HTTP service and the CLI. Keys keep insertion
// order so bodies are stable byte for byte.

namespace qperf::wire {

using Json = nlohmann::ordered_json;

Json series_set(const std::vector<MetricSeries>& series);
Json histogram(const Histogram1D& hist);
Json grid(const HeatmapGrid& grid, bool include_members = false);
/// `qubits[i]` is the qubit id of row/series i.
Json cluster(const ClusterResult& result, const std::vector<int>& qubits);
Json matrix(const DistanceMatrix& matrix, const std::vector<int>& qubits);
Json report(const OptimizationReport& report);
Json topology(const DeviceTopology& topology);

}  // namespace qperf::wire
