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

#include "qqa/linalg.hpp"

#include <cmath>

namespace qqa {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

EigenSystem herm_eig(const Matrix& h, double tol) {
  if (h.rows() != h.cols())
    throw NotHermitianError("matrix is not square");
  if (!is_hermitian(h, tol))
    throw NotHermitianError("max |A - A^dag| entry exceeds tolerance");
  // Symmetrize to suppress roundoff drift before decomposing.
  Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix expm_herm(const EigenSystem& es, Complex scale) {
  Vector phases(es.eigenvalues.size());
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k)
    phases(k) = std::exp(scale * es.eigenvalues(k));
  return es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint();
}

Matrix expm_herm(const Matrix& h, Complex scale) {
  return expm_herm(herm_eig(h), scale);
}

Matrix pauli_i2() { return Matrix::Identity(2, 2); }

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

Matrix pauli_y() {
  Matrix y(2, 2);
  y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return y;
}

Matrix pauli_z() {
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

QuantumState QuantumState::pure(int num_qubits, Vector psi) {
  QuantumState s;
  s.kind = Kind::PureVector;
  s.num_qubits = num_qubits;
  s.data = std::move(psi);
  if (s.data.rows() != s.dim())
    throw DimensionMismatchError("pure state vector length != 2^K");
  return s;
}

QuantumState QuantumState::density(int num_qubits, Matrix rho) {
  QuantumState s;
  s.kind = Kind::DensityMatrix;
  s.num_qubits = num_qubits;
  s.data = std::move(rho);
  if (s.data.rows() != s.dim() || s.data.cols() != s.dim())
    throw DimensionMismatchError("density matrix shape != 2^K x 2^K");
  return s;
}

QuantumState QuantumState::basis(int num_qubits, long long index) {
  Vector psi = Vector::Zero(1LL << num_qubits);
  if (index < 0 || index >= psi.rows())
    throw IndexOutOfRangeError("basis index");
  psi(index) = 1.0;
  return pure(num_qubits, std::move(psi));
}

Matrix QuantumState::to_density() const {
  if (kind == Kind::DensityMatrix) return data;
  return data * data.adjoint();
}

void QuantumState::validate() const {
  if (kind == Kind::PureVector) {
    double norm = data.norm();
    if (std::abs(norm - 1.0) > 1e-10)
      throw std::runtime_error("pure state norm deviates from 1");
  } else {
    if (std::abs(data.trace().real() - 1.0) > 1e-10 ||
        std::abs(data.trace().imag()) > 1e-10)
      throw std::runtime_error("density matrix trace deviates from 1");
    if (!is_hermitian(data, 1e-10))
      throw NotHermitianError("density matrix");
    EigenSystem es = herm_eig(data);
    if (es.eigenvalues.minCoeff() < -1e-10)
      throw std::runtime_error("density matrix has a negative eigenvalue");
  }
}

QuantumState partial_trace(const QuantumState& rho, const std::set<int>& keep) {
  const int total = rho.num_qubits;
  for (int q : keep)
    if (q < 0 || q >= total) throw IndexOutOfRangeError("partial_trace keep set");

  std::vector<int> kept(keep.begin(), keep.end());
  std::vector<int> traced;
  for (int q = 0; q < total; ++q)
    if (!keep.count(q)) traced.push_back(q);

  const Matrix full = rho.to_density();
  const long long dim_keep = 1LL << kept.size();
  const long long dim_env = 1LL << traced.size();

  auto assemble = [&](long long k, long long e) {
    long long idx = 0;
    for (size_t b = 0; b < kept.size(); ++b)
      idx |= ((k >> b) & 1LL) << kept[b];
    for (size_t b = 0; b < traced.size(); ++b)
      idx |= ((e >> b) & 1LL) << traced[b];
    return idx;
  };

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (long long a = 0; a < dim_keep; ++a)
    for (long long b = 0; b < dim_keep; ++b) {
      Complex sum = 0.0;
      for (long long e = 0; e < dim_env; ++e)
        sum += full(assemble(a, e), assemble(b, e));
      out(a, b) = sum;
    }
  return QuantumState::density(static_cast<int>(kept.size()), std::move(out));
}

Matrix partial_transpose(const QuantumState& rho, int first_j_qubits) {
  const int total = rho.num_qubits;
  if (first_j_qubits < 1 || first_j_qubits > total - 1)
    throw IndexOutOfRangeError("partial_transpose subsystem size");

  const Matrix full = rho.to_density();
  const long long dim_a = 1LL << first_j_qubits;          // leading block
  const long long dim_b = 1LL << (total - first_j_qubits);

  Matrix out(full.rows(), full.cols());
  for (long long a = 0; a < dim_a; ++a)
    for (long long ap = 0; ap < dim_a; ++ap)
      for (long long b = 0; b < dim_b; ++b)
        for (long long bp = 0; bp < dim_b; ++bp)
          out(a * dim_b + b, ap * dim_b + bp) =
              full(ap * dim_b + b, a * dim_b + bp);
  return out;
}

}  // namespace qqa
