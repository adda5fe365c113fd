// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

// Regenerates the checked-in fixtures under data/.

#include <fstream>
#include <iostream>
#include <string>

#include "qperf/synthetic.hpp"
#include "qperf/topology.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  {
    std::ofstream out(dir + "/heavy_hex_127.json");
    out << qperf::topology_to_json(qperf::heavy_hex_127()) << '\n';
  }
  {
    qperf::SyntheticDeviceOptions small;
    small.num_qubits = 5;
    small.days = 30;
    small.missing_rate = 0.05;
    small.anomalous_qubits = {3};
    std::ofstream out(dir + "/sample_calibration.csv");
    qperf::write_csv(out, qperf::synthetic_calibration(small));
  }
  std::cout << "wrote fixtures to " << dir << '\n';
  return 0;
}
