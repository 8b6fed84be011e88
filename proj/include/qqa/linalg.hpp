// Copyright 2026 The qqa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "qqa/errors.hpp"

namespace qqa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-10;

/// Qubit ordering is little-endian throughout: qubit 0 is the least
/// significant bit of a basis-state index, so an operator acting on the
/// high qubits appears as the LEFT factor of a Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol = kHermTol);

/// Hermitian eigendecomposition. Eigenvalues ascending, eigenvectors as
/// orthonormal columns. The input is symmetrized as (A + A^dag)/2 before
/// decomposition; throws NotHermitianError if the deviation exceeds tol.
struct EigenSystem {
  RealVector eigenvalues;
  Matrix eigenvectors;
};
EigenSystem herm_eig(const Matrix& h, double tol = kHermTol);

/// exp(scale * H) for Hermitian H via eigendecomposition,
/// V diag(exp(scale*lambda)) V^dag.
Matrix expm_herm(const Matrix& h, Complex scale);
Matrix expm_herm(const EigenSystem& es, Complex scale);

// 2x2 building blocks.
Matrix pauli_i2();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Quantum state over num_qubits qubits: a normalized 2^K column vector or
/// a unit-trace positive semidefinite 2^K x 2^K density matrix.
struct QuantumState {
  enum class Kind { PureVector, DensityMatrix };

  Kind kind = Kind::PureVector;
  int num_qubits = 0;
  Matrix data;  // 2^K x 1 or 2^K x 2^K

  static QuantumState pure(int num_qubits, Vector psi);
  static QuantumState density(int num_qubits, Matrix rho);
  /// Computational basis state |index>.
  static QuantumState basis(int num_qubits, long long index);

  long long dim() const { return 1LL << num_qubits; }
  bool is_pure() const { return kind == Kind::PureVector; }
  /// Density-matrix view (|psi><psi| for pure inputs).
  Matrix to_density() const;
  /// Checks the norm/trace/positivity invariants; throws on violation.
  void validate() const;
};

/// Trace out every qubit not in `keep`; result qubits are relabeled in the
/// ascending order of the kept indices.
QuantumState partial_trace(const QuantumState& rho, const std::set<int>& keep);

/// Transpose on the leading j qubits (the most significant ones), i.e. the
/// 2^j factor of the bipartition 2^j | 2^(K-j).
Matrix partial_transpose(const QuantumState& rho, int first_j_qubits);

}  // namespace qqa
