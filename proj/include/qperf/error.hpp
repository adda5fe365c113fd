// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qperf {

/// Caller supplied data that violates an operation's contract (malformed rows,
/// unknown metrics, out-of-range indices, k > n, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request names something that does not exist (metric, qubit).
class NotFoundError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace qperf
