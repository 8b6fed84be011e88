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

#include "qqa/encoding.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qqa {

std::string to_string(EncodingScheme scheme) {
  switch (scheme) {
    case EncodingScheme::Binary: return "binary";
    case EncodingScheme::Symmetric: return "symmetric";
    case EncodingScheme::Unary: return "unary";
  }
  return "?";
}

EncodingScheme encoding_scheme_from_string(const std::string& name) {
  if (name == "binary") return EncodingScheme::Binary;
  if (name == "symmetric") return EncodingScheme::Symmetric;
  if (name == "unary") return EncodingScheme::Unary;
  throw std::invalid_argument("unknown encoding scheme: " + name);
}

int qubits_for(EncodingScheme scheme, int dim_d) {
  if (dim_d < 2) throw DimensionTooSmallError("D must be >= 2");
  switch (scheme) {
    case EncodingScheme::Binary: {
      int k = 0;
      while ((1 << k) < dim_d) ++k;
      return k;
    }
    case EncodingScheme::Symmetric: return dim_d - 1;
    case EncodingScheme::Unary: return dim_d;
  }
  return 0;
}

EncodingMap build_encoding(EncodingScheme scheme, int dim_d) {
  const int k = qubits_for(scheme, dim_d);
  const long long dim_q = 1LL << k;
  Matrix m = Matrix::Zero(dim_q, dim_d);

  switch (scheme) {
    case EncodingScheme::Binary:
      for (int d = 0; d < dim_d; ++d) m(d, d) = 1.0;
      break;
    case EncodingScheme::Symmetric:
      // Level d spreads uniformly over the bitstrings of Hamming weight d,
      // visited in increasing integer order.
      for (long long x = 0; x < dim_q; ++x) {
        int w = std::popcount(static_cast<unsigned long long>(x));
        m(x, w) = 1.0;
      }
      for (int d = 0; d < dim_d; ++d) m.col(d) /= m.col(d).norm();
      break;
    case EncodingScheme::Unary:
      for (int d = 0; d < dim_d; ++d) m(1LL << d, d) = 1.0;
      break;
  }
  return EncodingMap{scheme, dim_d, k, std::move(m)};
}

Matrix EncodingMap::map_operator(const Matrix& op_qudit) const {
  if (op_qudit.rows() != dim_d || op_qudit.cols() != dim_d)
    throw DimensionMismatchError("operator dimension != D");
  return isometry * op_qudit * isometry.adjoint();
}

Matrix EncodingMap::restrict_operator(const Matrix& op_qubit) const {
  if (op_qubit.rows() != isometry.rows() || op_qubit.cols() != isometry.rows())
    throw DimensionMismatchError("operator dimension != 2^K");
  return isometry.adjoint() * op_qubit * isometry;
}

Matrix EncodingMap::feasible_projector() const {
  return isometry * isometry.adjoint();
}

EncodingMap tensor_encoding(const EncodingMap& site_map, int n_factors) {
  if (n_factors < 1) throw DimensionTooSmallError("need at least one factor");
  EncodingMap out = site_map;
  for (int i = 1; i < n_factors; ++i) {
    out.isometry = kron(site_map.isometry, out.isometry);
    out.dim_d *= site_map.dim_d;
    out.num_qubits += site_map.num_qubits;
  }
  return out;
}

}  // namespace qqa
