// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qperf/circuit.hpp"

namespace qperf {

enum class QasmErrorKind {
  syntax,
  unknown_gate,
  bad_arity,
  index_out_of_range,
  redeclaration,
  unsupported_feature,
};

std::string_view qasm_error_kind_name(QasmErrorKind kind);

/// Parse failure with a 1-based line/column inside the source.
class QasmError : public std::runtime_error {
 public:
  QasmError(QasmErrorKind kind, int line, int column, const std::string& message);

  QasmErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  /// Message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  QasmErrorKind kind_;
  int line_;
  int column_;
  std::string detail_;
};

/// Parses the supported OpenQASM 2.0 subset. Registers are flattened in
/// declaration order; register operands broadcast per index.
Circuit parse_qasm(std::string_view text);

/// Canonical text: header, include, `qreg q[n];`, `creg c[m];` (when m > 0),
/// one statement per line, angles with 17 significant digits.
std::string emit_qasm(const Circuit& circuit);

}  // namespace qperf
