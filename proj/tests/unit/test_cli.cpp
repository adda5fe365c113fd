// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qperf/service.hpp"
#include "qperf/topology.hpp"

#ifndef QPERF_CLI_PATH
#error "QPERF_CLI_PATH must be defined"
#endif
#ifndef QPERF_DATA_DIR
#error "QPERF_DATA_DIR must be defined"
#endif

namespace fs = std::filesystem;
using namespace qperf;
using wire::Json;

namespace {

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("qperf_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string at(const std::string& name) const { return (dir / name).string(); }
};

const Workspace& workspace() {
  static const Workspace w;
  return w;
}

int run(const std::string& args) {
  const std::string cmd = std::string(QPERF_CLI_PATH) + " " + args + " > " + workspace().at("stdout.txt") + " 2> " +
                          workspace().at("stderr.txt");
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Full-size archive so the k > n precondition is checked against 127 qubits.
const std::string& store_path() {
  static const std::string path = [] {
    const auto csv = workspace().at("calib.csv");
    const auto store = workspace().at("store.json");
    REQUIRE(run("synth --days 40 --out " + csv) == 0);
    REQUIRE(run("ingest --input " + csv + " --store " + store) == 0);
    return store;
  }();
  return path;
}

const Service& service() {
  static const Service s(store_from_json(slurp(store_path())), std::nullopt);
  return s;
}

}  // namespace

TEST_CASE("transpile happy path") {
  const auto out = workspace().at("r.json");
  CHECK(run("transpile --qasm " + std::string(QPERF_DATA_DIR) + "/bell.qasm --out " + out) == 0);
  const auto report = Json::parse(slurp(out));
  CHECK(report["levels"].size() == 3);
  CHECK(report["layout"].is_null());
}

TEST_CASE("transpile with a topology and a level subset") {
  const auto out = workspace().at("routed.json");
  CHECK(run("transpile --qasm " + std::string(QPERF_DATA_DIR) + "/bell.qasm --levels 1,3 --topology " +
            std::string(QPERF_DATA_DIR) + "/heavy_hex_127.json --out " + out) == 0);
  const auto report = Json::parse(slurp(out));
  CHECK(report["levels"].size() == 2);
  CHECK(report["levels"][1]["level"] == 3);
  CHECK(report["layout"].size() == 127);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("cluster --metric T1") == 1);
  CHECK(slurp(workspace().at("stderr.txt")).find("--store") != std::string::npos);
  CHECK(run("") == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("cluster --store x --metric T1 --distance manhattan") == 1);
  CHECK(run("transpile --qasm x --levels 4") == 1);
}

TEST_CASE("data errors exit 2") {
  CHECK(run("cluster --store " + store_path() + " --metric readout_error --k 200") == 2);
  CHECK(slurp(workspace().at("stderr.txt")).find("k exceeds series count") != std::string::npos);
  CHECK(run("cluster --store " + store_path() + " --metric nope") == 2);
  CHECK(run("cluster --store " + workspace().at("missing.json") + " --metric T1") == 2);
  std::ofstream(workspace().at("bad.qasm")) << "OPENQASM 2.0;\nqreg q[1];\nh q[3];\n";
  CHECK(run("transpile --qasm " + workspace().at("bad.qasm")) == 2);
  CHECK(slurp(workspace().at("stderr.txt")).find("line 3") != std::string::npos);
  std::ofstream(workspace().at("bad.csv")) << "2022-01-01,1,T1,NaN\n";
  CHECK(run("ingest --input " + workspace().at("bad.csv") + " --store " + workspace().at("bad.json")) == 2);
}

TEST_CASE("outputs equal the endpoint bodies byte for byte") {
  const auto out = workspace().at("out.json");
  const auto store = store_path();

  REQUIRE(run("cluster --store " + store + " --metric readout_error --k 6 --distance euclidean --seed 7 --out " + out) == 0);
  CHECK(slurp(out) == service()
                          .handle("POST", "/api/cluster", {},
                                  R"({"metric":"readout_error","k":6,"distance":"euclidean","seed":7})")
                          .body);

  REQUIRE(run("cluster --store " + store + " --metric T1 --k 3 --distance dtw --band 4 --seed 1 --out " + out) == 0);
  CHECK(slurp(out) ==
        service().handle("POST", "/api/cluster", {}, R"({"metric":"T1","k":3,"distance":"dtw","seed":1,"band":4})").body);

  REQUIRE(run("bin2d --store " + store + " --metric T2 --nx 8 --ny 6 --out " + out) == 0);
  CHECK(slurp(out) == service().handle("POST", "/api/bin2d", {}, R"({"metric":"T2","nx":8,"ny":6})").body);

  REQUIRE(run("matrix --store " + store + " --metric T2 --distance euclidean --out " + out) == 0);
  CHECK(slurp(out) == service().handle("POST", "/api/matrix", {}, R"({"metric":"T2","distance":"euclidean"})").body);

  REQUIRE(run("histogram --store " + store + " --metric T1 --qubit 3 --bins 5 --out " + out) == 0);
  CHECK(slurp(out) == service().handle("POST", "/api/histogram", {}, R"({"metric":"T1","qubit":3,"bins":5})").body);

  const std::string qasm = slurp(std::string(QPERF_DATA_DIR) + "/bell.qasm");
  REQUIRE(run("transpile --qasm " + std::string(QPERF_DATA_DIR) + "/bell.qasm --out " + out) == 0);
  CHECK(slurp(out) == service().handle("POST", "/api/transpile", {}, Json{{"qasm", qasm}}.dump()).body);
}

TEST_CASE("synth output ingests to the expected size") {
  const auto csv = workspace().at("small.csv");
  CHECK(run("synth --qubits 3 --days 5 --out " + csv) == 0);
  CHECK(run("ingest --input " + csv + " --store " + workspace().at("small.json")) == 0);
  CHECK(store_from_json(slurp(workspace().at("small.json"))).size() == 3 * 5 * 3);
}
