// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qperf/random.hpp"

namespace qperf {

std::vector<CalibrationRecord> synthetic_calibration(const SyntheticDeviceOptions& options) {
  using std::numbers::pi;
  Rng rng(options.seed);
  std::vector<CalibrationRecord> records;
  records.reserve(static_cast<std::size_t>(options.num_qubits) * static_cast<std::size_t>(options.days) * 3);

  for (int q = 0; q < options.num_qubits; ++q) {
    const bool anomalous =
        std::find(options.anomalous_qubits.begin(), options.anomalous_qubits.end(), q) != options.anomalous_qubits.end();
    const double t1_base = std::max(30.0, rng.normal(110.0, 25.0));
    const double t2_base = std::max(15.0, std::min(1.6 * t1_base, rng.normal(95.0, 30.0)));
    const double ro_base = std::clamp(0.012 * std::exp(rng.normal(0.0, 0.35)), 0.003, 0.05);
    const double period = rng.uniform(60.0, 180.0);
    const double phase = rng.uniform(0.0, 2.0 * pi);

    for (int d = 0; d < options.days; ++d) {
      const Day day{options.start.serial + d};
      const double season = std::sin(2.0 * pi * d / period + phase);

      // Draw every value even on missing days so the stream does not depend
      // on the missing rate.
      const double t1 = std::max(1.0, t1_base * (1.0 + 0.08 * season) + rng.normal(0.0, 0.06 * t1_base));
      const double t2 = std::max(1.0, std::min(2.0 * t1, t2_base * (1.0 + 0.1 * season) + rng.normal(0.0, 0.1 * t2_base)));
      double ro = ro_base * (1.0 + 0.15 * season) + rng.normal(0.0, 0.1 * ro_base);
      if (anomalous) {
        // Slow upward drift with bursts, well above the device's typical level.
        ro = 0.06 + 0.08 * static_cast<double>(d) / options.days + 0.03 * std::abs(season) + rng.normal(0.0, 0.01);
        if (rng.uniform() < 0.05) ro += 0.15;
      }
      ro = std::clamp(ro, 0.0005, 0.5);
      const bool missing = rng.uniform() < options.missing_rate;
      if (missing) continue;
      records.push_back({day, q, "T1", t1});
      records.push_back({day, q, "T2", t2});
      records.push_back({day, q, "readout_error", ro});
    }
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<CalibrationRecord>& records) {
  out << "date,qubit,metric,value\n";
  char buf[32];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.10g", r.value);
    out << format_day(r.date) << ',' << r.qubit << ',' << r.metric << ',' << buf << '\n';
  }
}

}  // namespace qperf
