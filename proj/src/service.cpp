// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/service.hpp"

#include <iostream>

#include <httplib.h>

#include "qperf/binning.hpp"
#include "qperf/clustering.hpp"
#include "qperf/error.hpp"
#include "qperf/optimizer.hpp"
#include "qperf/qasm.hpp"

namespace qperf {

using wire::Json;

ApiError::ApiError(int status, std::string code, const std::string& message, std::optional<Location> location)
    : std::runtime_error(message), status_(status), code_(std::move(code)), location_(location) {}

Json ApiError::to_json() const {
  Json out = {{"status", status_}, {"code", code_}, {"message", what()}};
  if (location_) out["location"] = {{"line", location_->line}, {"column", location_->column}};
  return out;
}

std::string render(const Json& body) { return body.dump(); }

namespace {

ApiError bad_request(const std::string& message) { return ApiError(400, "bad_request", message); }

const Json& require(const Json& req, const char* key) {
  if (!req.is_object()) throw bad_request("request body must be a JSON object");
  const auto it = req.find(key);
  if (it == req.end() || it->is_null()) throw bad_request(std::string("missing field '") + key + "'");
  return *it;
}

std::string get_string(const Json& req, const char* key) {
  const Json& v = require(req, key);
  if (!v.is_string()) throw bad_request(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> opt_string(const Json& req, const char* key) {
  if (!req.contains(key) || req[key].is_null()) return std::nullopt;
  return get_string(req, key);
}

std::optional<long long> opt_integer(const Json& req, const char* key) {
  if (!req.is_object()) throw bad_request("request body must be a JSON object");
  if (!req.contains(key) || req[key].is_null()) return std::nullopt;
  const Json& v = req[key];
  if (!v.is_number_integer()) throw bad_request(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

bool opt_bool(const Json& req, const char* key, bool fallback) {
  if (!req.contains(key) || req[key].is_null()) return fallback;
  if (!req[key].is_boolean()) throw bad_request(std::string("field '") + key + "' must be a boolean");
  return req[key].get<bool>();
}

int bounded(long long v, long long lo, long long hi, const char* key) {
  if (v < lo || v > hi) {
    throw bad_request(std::string("field '") + key + "' must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

Day get_day(const Json& req, const char* key) {
  try {
    return parse_day(get_string(req, key));
  } catch (const DataError& e) {
    throw bad_request(std::string("field '") + key + "': " + e.what());
  }
}

DistanceMetric get_metric(const Json& req) {
  DistanceMetric metric;
  const auto name = opt_string(req, "distance").value_or("euclidean");
  try {
    metric.kind = parse_distance(name);
  } catch (const DataError& e) {
    throw bad_request(e.what());
  }
  if (auto band = opt_integer(req, "band"); band && metric.kind == DistanceKind::dtw) {
    metric.dtw_band = bounded(*band, 0, 1 << 20, "band");
  }
  return metric;
}

struct Prepared {
  std::vector<Series> series;
  std::vector<int> qubits;
};

Prepared prepare(const std::vector<MetricSeries>& set, bool znorm) {
  Prepared p;
  for (const auto& s : set) {
    p.series.push_back(preprocess_series(s, true, znorm));
    p.qubits.push_back(s.qubit);
  }
  return p;
}

}  // namespace

Service::Service(DataStore store, std::optional<DeviceTopology> topology)
    : store_(std::move(store)), topology_(std::move(topology)) {}

Json Service::metrics() const { return Json(store_.metrics()); }

Json Service::series(const std::string& metric) const { return wire::series_set(build_series(store_, metric)); }

Json Service::topology_json() const {
  if (!topology_) throw ApiError(404, "no_topology", "no device topology is loaded");
  return wire::topology(*topology_);
}

Json Service::bin2d(const Json& req) const {
  const auto set = build_series(store_, get_string(req, "metric"));
  const TimeRange span = data_span(set);
  const bool has_t0 = req.contains("t0") && !req["t0"].is_null();
  const bool has_t1 = req.contains("t1") && !req["t1"].is_null();
  const TimeRange window{has_t0 ? get_day(req, "t0") : span.first, has_t1 ? get_day(req, "t1") : span.last};
  const int nx = opt_integer(req, "nx") ? bounded(*opt_integer(req, "nx"), 1, 100000, "nx") : default_time_bins(window);
  const int ny = opt_integer(req, "ny") ? bounded(*opt_integer(req, "ny"), 1, 100000, "ny") : kDefaultValueBins;
  const HeatmapGrid grid = refocus(set, window, nx, ny);
  return wire::grid(grid, opt_bool(req, "include_members", false));
}

Json Service::cluster(const Json& req) const {
  const auto set = build_series(store_, get_string(req, "metric"));
  const int k = bounded(opt_integer(req, "k").value_or(kDefaultClusters), 1, 1 << 20, "k");
  const auto seed = opt_integer(req, "seed").value_or(0);
  if (seed < 0) throw bad_request("field 'seed' must be non-negative");
  const DistanceMetric metric = get_metric(req);
  if (static_cast<std::size_t>(k) > set.size()) {
    throw DataError("k exceeds series count (" + std::to_string(k) + " > " + std::to_string(set.size()) + ")");
  }
  const Prepared p = prepare(set, opt_bool(req, "znorm", false));
  const ClusterResult result = kmeans_timeseries(p.series, k, metric, static_cast<std::uint64_t>(seed));
  return wire::cluster(result, p.qubits);
}

Json Service::matrix(const Json& req) const {
  const auto set = build_series(store_, get_string(req, "metric"));
  const DistanceMetric metric = get_metric(req);
  const Prepared p = prepare(set, opt_bool(req, "znorm", false));
  return wire::matrix(distance_matrix(p.series, metric), p.qubits);
}

Json Service::histogram(const Json& req) const {
  const auto set = build_series(store_, get_string(req, "metric"));
  const auto qubit = opt_integer(req, "qubit");
  if (!qubit) throw bad_request("missing field 'qubit'");
  const int bins = bounded(opt_integer(req, "bins").value_or(20), 1, 100000, "bins");
  for (const auto& s : set) {
    if (s.qubit == *qubit) return wire::histogram(metric_histogram(s, bins));
  }
  throw ApiError(404, "unknown_qubit", "no data for qubit " + std::to_string(*qubit));
}

Json Service::transpile(const Json& req) const {
  const std::string qasm = get_string(req, "qasm");
  const bool use_topology = opt_bool(req, "use_topology", false);
  std::vector<int> levels{1, 2, 3};
  if (req.contains("levels") && !req["levels"].is_null()) {
    levels.clear();
    if (!req["levels"].is_array() || req["levels"].empty()) throw bad_request("field 'levels' must be a non-empty array");
    for (const auto& l : req["levels"]) {
      if (!l.is_number_integer()) throw bad_request("levels must be integers");
      levels.push_back(bounded(l.get<long long>(), 1, 3, "levels"));
    }
  }
  if (use_topology && !topology_) throw ApiError(400, "no_topology", "use_topology requested but no topology is loaded");
  try {
    return wire::report(optimization_report(qasm, use_topology ? &*topology_ : nullptr, levels));
  } catch (const QasmError& e) {
    throw ApiError(400, "bad_qasm", e.what(), ApiError::Location{e.line(), e.column()});
  }
}

HttpResponse Service::handle(std::string_view method, std::string_view path,
                             const std::map<std::string, std::string>& query, std::string_view body) const {
  const auto parse_body = [&]() {
    try {
      return Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw ApiError(400, "bad_json", std::string("request body is not valid JSON: ") + e.what());
    }
  };
  try {
    const bool get = method == "GET";
    const bool post = method == "POST";
    Json out;
    if (path == "/api/metrics" && get) {
      out = metrics();
    } else if (path == "/api/series" && get) {
      const auto it = query.find("metric");
      if (it == query.end()) throw bad_request("missing query parameter 'metric'");
      out = series(it->second);
    } else if (path == "/api/topology" && get) {
      out = topology_json();
    } else if (path == "/api/bin2d" && post) {
      out = bin2d(parse_body());
    } else if (path == "/api/cluster" && post) {
      out = cluster(parse_body());
    } else if (path == "/api/matrix" && post) {
      out = matrix(parse_body());
    } else if (path == "/api/histogram" && post) {
      out = histogram(parse_body());
    } else if (path == "/api/transpile" && post) {
      out = transpile(parse_body());
    } else {
      static const std::string_view kGets[] = {"/api/metrics", "/api/series", "/api/topology"};
      static const std::string_view kPosts[] = {"/api/bin2d", "/api/cluster", "/api/matrix", "/api/histogram",
                                                "/api/transpile"};
      bool known = false;
      for (auto p : kGets) known = known || p == path;
      for (auto p : kPosts) known = known || p == path;
      if (known) throw ApiError(405, "method_not_allowed", std::string(method) + " not allowed on " + std::string(path));
      throw ApiError(404, "not_found", "no endpoint " + std::string(path));
    }
    return {200, render(out)};
  } catch (const ApiError& e) {
    return {e.status(), render(e.to_json())};
  } catch (const NotFoundError& e) {
    return {404, render(ApiError(404, "unknown_metric", e.what()).to_json())};
  } catch (const QasmError& e) {
    return {400, render(ApiError(400, "bad_qasm", e.what(), ApiError::Location{e.line(), e.column()}).to_json())};
  } catch (const DataError& e) {
    return {400, render(ApiError(400, "invalid_argument", e.what()).to_json())};
  } catch (const std::exception& e) {
    return {500, render(ApiError(500, "internal", e.what()).to_json())};
  }
}

struct HttpServer::Impl {
  const Service& service;
  httplib::Server server;
};

HttpServer::HttpServer(const Service& service) : impl_(new Impl{service, {}}) {
  const auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const HttpResponse r = impl_->service.handle(req.method, req.path, query, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, "application/json");
  };
  impl_->server.Get(R"(/api/.*)", dispatch);
  impl_->server.Post(R"(/api/.*)", dispatch);
  impl_->server.Put(R"(/api/.*)", dispatch);
  impl_->server.Delete(R"(/api/.*)", dispatch);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw std::runtime_error("cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

void serve(const Service& service, const std::string& host, int port) {
  HttpServer server(service);
  const int bound = server.bind(host, port);
  std::cerr << "qperf: serving on http://" << host << ":" << bound << "/api\n";
  server.run();
}

}  // namespace qperf
