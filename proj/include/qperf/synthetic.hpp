// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "qperf/calendar.hpp"
#include "qperf/device_data.hpp"

namespace qperf {

/// Parameters of the synthetic calibration archive used as a stand-in for a
/// real device history (T1, T2 in microseconds and readout error).
struct SyntheticDeviceOptions {
  int num_qubits = 127;
  int days = 485;
  Day start = Day{18779};  // 2021-06-01
  std::uint64_t seed = 1;
  /// Probability that a qubit has no calibration on a given day.
  double missing_rate = 0.0;
  /// Qubits whose readout error follows a distinctly different pattern.
  std::vector<int> anomalous_qubits = {4, 9, 12, 109};
};

std::vector<CalibrationRecord> synthetic_calibration(const SyntheticDeviceOptions& options);

/// Writes `date,qubit,metric,value` with a header row.
void write_csv(std::ostream& out, const std::vector<CalibrationRecord>& records);

}  // namespace qperf
