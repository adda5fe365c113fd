// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qperf/device_data.hpp"
#include "qperf/topology.hpp"
#include "qperf/wire.hpp"

namespace qperf {

/// Error body `{status, code, message, location?}`. 4xx for caller faults,
/// 5xx for engine faults.
class ApiError : public std::runtime_error {
 public:
  struct Location {
    int line = 0;
    int column = 0;
  };

  ApiError(int status, std::string code, const std::string& message,
           std::optional<Location> location = std::nullopt);

  int status() const { return status_; }
  const std::string& code() const { return code_; }
  const std::optional<Location>& location() const { return location_; }

  wire::Json to_json() const;

 private:
  int status_;
  std::string code_;
  std::optional<Location> location_;
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

/// Request handlers over an immutable store and topology. Every handler is a
/// pure function of (store, topology, request); the CLI calls the same
/// handlers so its output files equal the endpoint bodies.
class Service {
 public:
  Service(DataStore store, std::optional<DeviceTopology> topology);

  const DataStore& store() const { return store_; }
  const std::optional<DeviceTopology>& topology() const { return topology_; }

  wire::Json metrics() const;
  wire::Json series(const std::string& metric) const;
  wire::Json topology_json() const;
  /// `{metric, t0?, t1?, nx?, ny?, include_members?}`; t0/t1 are ISO dates.
  wire::Json bin2d(const wire::Json& request) const;
  /// `{metric, k?, distance?, seed?, band?, znorm?}`
  wire::Json cluster(const wire::Json& request) const;
  /// `{metric, distance?, band?, znorm?}`
  wire::Json matrix(const wire::Json& request) const;
  /// `{metric, qubit, bins?}`
  wire::Json histogram(const wire::Json& request) const;
  /// `{qasm, use_topology?, levels?}`
  wire::Json transpile(const wire::Json& request) const;

  /// Routes one request and renders the body (errors included).
  HttpResponse handle(std::string_view method, std::string_view path,
                      const std::map<std::string, std::string>& query,
                      std::string_view body) const;

 private:
  DataStore store_;
  std::optional<DeviceTopology> topology_;
};

/// Renders a JSON body exactly as the service sends it.
std::string render(const wire::Json& body);

/// HTTP front end for a Service.
class HttpServer {
 public:
  explicit HttpServer(const Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the address; port 0 picks a free port. Returns the bound port.
  /// Throws std::runtime_error on failure.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Serves the /api endpoints until the process is stopped. Throws
/// std::runtime_error when the address cannot be bound.
void serve(const Service& service, const std::string& host, int port);

}  // namespace qperf
