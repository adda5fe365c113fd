// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qperf/device_data.hpp"
#include "qperf/error.hpp"
#include "qperf/qasm.hpp"
#include "qperf/service.hpp"
#include "qperf/synthetic.hpp"
#include "qperf/topology.hpp"

namespace {

using qperf::wire::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qperf::DataError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qperf::DataError("cannot write " + path);
  out << text;
  if (!out.flush()) throw qperf::DataError("cannot write " + path);
}

// Writes the body byte for byte as the endpoint would send it; without --out
// it goes to stdout followed by a newline.
void emit(const std::string& out_path, const Json& body) {
  const std::string text = qperf::render(body);
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    write_file(out_path, text);
  }
}

qperf::Service load_service(const std::string& store_path, const std::string& topology_path) {
  qperf::DataStore store;
  if (!store_path.empty()) store = qperf::store_from_json(read_file(store_path));
  std::optional<qperf::DeviceTopology> topology;
  if (!topology_path.empty()) topology = qperf::load_topology(read_file(topology_path));
  return qperf::Service(std::move(store), std::move(topology));
}

struct Options {
  std::string input;
  std::string store;
  std::string topology;
  std::string qasm;
  std::string out;
  std::string metric;
  std::string distance = "euclidean";
  std::string host = "127.0.0.1";
  std::string t0;
  std::string t1;
  std::vector<int> levels{1, 2, 3};
  std::optional<int> k;
  std::optional<int> band;
  std::optional<int> nx;
  std::optional<int> ny;
  std::optional<int> bins;
  long long seed = 0;
  int qubit = 0;
  int port = 8080;
  bool znorm = false;
  bool members = false;
  qperf::SyntheticDeviceOptions synth;
};

template <typename T>
void put_optional(Json& req, const char* key, const std::optional<T>& v) {
  if (v) req[key] = *v;
}

int run(const std::string& command, const Options& o) {
  if (command == "ingest") {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw qperf::DataError("cannot open " + o.input);
    const qperf::DataStore store = qperf::ingest_csv(in);
    write_file(o.store, qperf::store_to_json(store, o.input));
    std::cerr << "qperf: ingested " << store.size() << " records\n";
    return kExitOk;
  }
  if (command == "synth") {
    std::ostringstream csv;
    qperf::write_csv(csv, qperf::synthetic_calibration(o.synth));
    if (o.out.empty()) {
      std::cout << csv.str();
    } else {
      write_file(o.out, csv.str());
    }
    return kExitOk;
  }
  if (command == "transpile") {
    const qperf::Service service = load_service({}, o.topology);
    Json req = {{"qasm", read_file(o.qasm)}, {"use_topology", !o.topology.empty()}, {"levels", o.levels}};
    emit(o.out, service.transpile(req));
    return kExitOk;
  }

  const qperf::Service service = load_service(o.store, o.topology);
  if (command == "serve") {
    qperf::serve(service, o.host, o.port);
    return kExitOk;
  }
  Json req = {{"metric", o.metric}};
  if (command == "cluster") {
    req["k"] = o.k.value_or(6);
    req["distance"] = o.distance;
    req["seed"] = o.seed;
    put_optional(req, "band", o.band);
    if (o.znorm) req["znorm"] = true;
    emit(o.out, service.cluster(req));
  } else if (command == "bin2d") {
    if (!o.t0.empty()) req["t0"] = o.t0;
    if (!o.t1.empty()) req["t1"] = o.t1;
    put_optional(req, "nx", o.nx);
    put_optional(req, "ny", o.ny);
    if (o.members) req["include_members"] = true;
    emit(o.out, service.bin2d(req));
  } else if (command == "matrix") {
    req["distance"] = o.distance;
    put_optional(req, "band", o.band);
    if (o.znorm) req["znorm"] = true;
    emit(o.out, service.matrix(req));
  } else if (command == "histogram") {
    req["qubit"] = o.qubit;
    put_optional(req, "bins", o.bins);
    emit(o.out, service.histogram(req));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qperf: qubit performance analytics and circuit optimization"};
  app.require_subcommand(1);
  Options o;

  auto* ingest = app.add_subcommand("ingest", "Convert a calibration CSV into a store file");
  ingest->add_option("--input", o.input, "CSV with date,qubit,metric,value rows")->required();
  ingest->add_option("--store", o.store, "Output store JSON")->required();

  const auto analysis = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--store", o.store, "Store JSON")->required();
    sub->add_option("--metric", o.metric, "Metric identifier")->required();
    sub->add_option("--out", o.out, "Output JSON (stdout when omitted)");
    return sub;
  };

  auto* cluster = analysis("cluster", "k-means clustering of per-qubit series");
  cluster->add_option("--k", o.k, "Number of clusters")->check(CLI::PositiveNumber);
  cluster->add_option("--distance", o.distance)->check(CLI::IsMember({"euclidean", "dtw"}));
  cluster->add_option("--seed", o.seed)->check(CLI::NonNegativeNumber);
  cluster->add_option("--band", o.band, "Sakoe-Chiba half-width for dtw")->check(CLI::NonNegativeNumber);
  cluster->add_flag("--znorm", o.znorm, "z-normalize series first");

  auto* bin2d = analysis("bin2d", "2D time x value heatmap grid");
  bin2d->add_option("--nx", o.nx)->check(CLI::PositiveNumber);
  bin2d->add_option("--ny", o.ny)->check(CLI::PositiveNumber);
  bin2d->add_option("--t0", o.t0, "First day of the window (YYYY-MM-DD)");
  bin2d->add_option("--t1", o.t1, "Last day of the window (YYYY-MM-DD)");
  bin2d->add_flag("--members", o.members, "Include per-bin members");

  auto* matrix = analysis("matrix", "All-pairs distance matrix");
  matrix->add_option("--distance", o.distance)->check(CLI::IsMember({"euclidean", "dtw"}));
  matrix->add_option("--band", o.band)->check(CLI::NonNegativeNumber);
  matrix->add_flag("--znorm", o.znorm);

  auto* histogram = analysis("histogram", "Value histogram of one qubit");
  histogram->add_option("--qubit", o.qubit)->required()->check(CLI::NonNegativeNumber);
  histogram->add_option("--bins", o.bins)->check(CLI::PositiveNumber);

  auto* transpile = app.add_subcommand("transpile", "Optimize a QASM circuit at levels 1-3");
  transpile->add_option("--qasm", o.qasm, "OpenQASM 2.0 file")->required();
  transpile->add_option("--levels", o.levels, "Comma-separated levels")
      ->delimiter(',')
      ->check(CLI::Range(1, 3));
  transpile->add_option("--topology", o.topology, "Coupling map JSON; enables routing");
  transpile->add_option("--out", o.out, "Output JSON (stdout when omitted)");

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  serve->add_option("--store", o.store, "Store JSON")->required();
  serve->add_option("--topology", o.topology, "Coupling map JSON");
  serve->add_option("--port", o.port)->check(CLI::Range(0, 65535));
  serve->add_option("--host", o.host);

  auto* synth = app.add_subcommand("synth", "Write a synthetic calibration CSV");
  synth->add_option("--out", o.out, "Output CSV (stdout when omitted)");
  synth->add_option("--qubits", o.synth.num_qubits)->check(CLI::PositiveNumber);
  synth->add_option("--days", o.synth.days)->check(CLI::PositiveNumber);
  synth->add_option("--seed", o.synth.seed);
  synth->add_option("--missing-rate", o.synth.missing_rate)->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const qperf::ApiError& e) {
    std::cerr << "qperf: " << e.code();
    if (e.location()) std::cerr << " at line " << e.location()->line << ", column " << e.location()->column;
    std::cerr << ": " << e.what() << '\n';
    return kExitData;
  } catch (const qperf::QasmError& e) {
    std::cerr << "qperf: " << e.what() << '\n';
    return kExitData;
  } catch (const qperf::DataError& e) {
    std::cerr << "qperf: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "qperf: " << e.what() << '\n';
    return kExitData;
  }
}
