// Copyright 2026 The qperf Authors
// SPDX-License-Identifier: Apache-2.0

#include "qperf/unitary.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qperf/error.hpp"

namespace qperf {

namespace {

using std::numbers::pi;

const cplx kI{0.0, 1.0};

Matrix from_rows(std::size_t dim, std::initializer_list<cplx> values) {
  Matrix m(dim);
  std::size_t k = 0;
  for (const cplx& v : values) {
    m(k / dim, k % dim) = v;
    ++k;
  }
  return m;
}

Matrix u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return from_rows(2, {c, -std::polar(1.0, lambda) * s, std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c});
}

Matrix diag2(cplx a, cplx b) { return from_rows(2, {a, 0.0, 0.0, b}); }

/// U <- G U where G acts on `qubits` (operand k = local bit k).
void apply_left(Matrix& u, const Matrix& g, const std::vector<int>& qubits) {
  const std::size_t dim = u.dim();
  const std::size_t k = qubits.size();
  const std::size_t local = std::size_t{1} << k;
  std::size_t mask = 0;
  std::vector<std::size_t> offset(local, 0);
  for (std::size_t b = 0; b < k; ++b) mask |= std::size_t{1} << qubits[b];
  for (std::size_t l = 0; l < local; ++l) {
    for (std::size_t b = 0; b < k; ++b) {
      if ((l >> b) & 1U) offset[l] |= std::size_t{1} << qubits[b];
    }
  }
  std::vector<cplx> in(local), out(local);
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t base = 0; base < dim; ++base) {
      if ((base & mask) != 0) continue;
      for (std::size_t l = 0; l < local; ++l) in[l] = u(base | offset[l], col);
      for (std::size_t r = 0; r < local; ++r) {
        cplx acc = 0.0;
        for (std::size_t c = 0; c < local; ++c) acc += g(r, c) * in[c];
        out[r] = acc;
      }
      for (std::size_t l = 0; l < local; ++l) u(base | offset[l], col) = out[l];
    }
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) throw DataError("matrix dimension mismatch");
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const cplx a = (*this)(i, k);
      if (a == cplx{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Matrix Matrix::scaled(cplx factor) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

Matrix gate_matrix(GateKind kind, std::span<const double> p) {
  if (static_cast<int>(p.size()) != signature(kind).num_params) {
    throw DataError("wrong parameter count for " + std::string(gate_name(kind)));
  }
  const double r = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::u1:
      return diag2(1.0, std::polar(1.0, p[0]));
    case GateKind::u2:
      return u3_matrix(pi / 2.0, p[0], p[1]);
    case GateKind::u3:
    case GateKind::u:
      return u3_matrix(p[0], p[1], p[2]);
    case GateKind::rx: {
      const double c = std::cos(p[0] / 2.0), s = std::sin(p[0] / 2.0);
      return from_rows(2, {c, -kI * s, -kI * s, c});
    }
    case GateKind::ry: {
      const double c = std::cos(p[0] / 2.0), s = std::sin(p[0] / 2.0);
      return from_rows(2, {c, -s, s, c});
    }
    case GateKind::rz:
      return diag2(std::polar(1.0, -p[0] / 2.0), std::polar(1.0, p[0] / 2.0));
    case GateKind::x:
      return from_rows(2, {0.0, 1.0, 1.0, 0.0});
    case GateKind::y:
      return from_rows(2, {0.0, -kI, kI, 0.0});
    case GateKind::z:
      return diag2(1.0, -1.0);
    case GateKind::h:
      return from_rows(2, {r, r, r, -r});
    case GateKind::s:
      return diag2(1.0, kI);
    case GateKind::sdg:
      return diag2(1.0, -kI);
    case GateKind::t:
      return diag2(1.0, std::polar(1.0, pi / 4.0));
    case GateKind::tdg:
      return diag2(1.0, std::polar(1.0, -pi / 4.0));
    case GateKind::sx:
      return from_rows(2, {cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)});
    case GateKind::sxdg:
      return from_rows(2, {cplx(0.5, -0.5), cplx(0.5, 0.5), cplx(0.5, 0.5), cplx(0.5, -0.5)});
    case GateKind::cx: {
      // control = bit 0, target = bit 1: |1,0> (index 1) <-> |1,1> (index 3)
      Matrix m(4);
      m(0, 0) = 1.0;
      m(2, 2) = 1.0;
      m(1, 3) = 1.0;
      m(3, 1) = 1.0;
      return m;
    }
    case GateKind::cz: {
      Matrix m = Matrix::identity(4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::swap: {
      Matrix m(4);
      m(0, 0) = 1.0;
      m(3, 3) = 1.0;
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      return m;
    }
    case GateKind::ccx: {
      Matrix m = Matrix::identity(8);
      m(3, 3) = 0.0;
      m(7, 7) = 0.0;
      m(3, 7) = 1.0;
      m(7, 3) = 1.0;
      return m;
    }
    case GateKind::barrier:
    case GateKind::measure:
      break;
  }
  throw DataError(std::string(gate_name(kind)) + " has no unitary matrix");
}

Matrix circuit_unitary(const Circuit& circuit) {
  if (circuit.num_qubits() > kMaxUnitaryQubits) {
    throw DataError("unitary oracle is limited to " + std::to_string(kMaxUnitaryQubits) + " qubits, circuit has " +
                    std::to_string(circuit.num_qubits()));
  }
  Matrix u = Matrix::identity(std::size_t{1} << circuit.num_qubits());
  for (const auto& op : circuit.ops()) {
    if (op.kind == GateKind::barrier) continue;
    if (op.kind == GateKind::measure) throw DataError("circuit contains a measurement");
    apply_left(u, gate_matrix(op.kind, op.params), op.qubits);
  }
  return u;
}

bool equivalent_up_to_global_phase(const Matrix& u, const Matrix& v, double tol) {
  if (u.dim() != v.dim()) throw DataError("unitary dimensions differ");
  cplx trace = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t k = 0; k < u.dim(); ++k) trace += std::conj(u(k, i)) * v(k, i);
  }
  const double dim = static_cast<double>(u.dim());
  return std::abs(std::abs(trace) - dim) <= tol * dim;
}

bool is_unitary(const Matrix& u, double tol) {
  const Matrix p = u.adjoint() * u;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    for (std::size_t j = 0; j < u.dim(); ++j) {
      const cplx want = i == j ? cplx{1.0} : cplx{};
      if (std::abs(p(i, j) - want) > tol) return false;
    }
  }
  return true;
}

}  // namespace qperf
