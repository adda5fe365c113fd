// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qperf/circuit.hpp"

namespace qperf {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const cplx> data() const { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix adjoint() const;
  Matrix scaled(cplx factor) const;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Matrix of a gate in its local basis: operand k is bit k of the local index
/// (operand 0 least significant). For cx the control is operand 0, for ccx
/// operands 0 and 1 are the controls.
///   rz(t) = diag(e^{-it/2}, e^{it/2})      u1(l) = diag(1, e^{il})
///   u3(t,p,l) = [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]]
///   sx = 1/2 [[1+i, 1-i], [1-i, 1+i]]
Matrix gate_matrix(GateKind kind, std::span<const double> params = {});

inline constexpr int kMaxUnitaryQubits = 10;

/// Product of the circuit's gate matrices with qubit 0 as the least
/// significant bit of the basis index. Barriers are identities. Throws
/// DataError for more than 10 qubits or any measurement.
Matrix circuit_unitary(const Circuit& circuit);

/// | |tr(U^dagger V)| - dim | <= tol * dim. Throws DataError on a dimension mismatch.
bool equivalent_up_to_global_phase(const Matrix& u, const Matrix& v, double tol = 1e-9);

bool is_unitary(const Matrix& u, double tol = 1e-12);

}  // namespace qperf
