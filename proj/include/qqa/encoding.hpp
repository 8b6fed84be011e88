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

#include <string>

#include "qqa/linalg.hpp"

namespace qqa {

enum class EncodingScheme { Binary, Symmetric, Unary };

std::string to_string(EncodingScheme scheme);
EncodingScheme encoding_scheme_from_string(const std::string& name);

/// Qubits needed to hold a D-level system under a scheme:
/// ceil(log2 D) / D-1 / D for binary / symmetric / unary.
int qubits_for(EncodingScheme scheme, int dim_d);

/// Isometry from a D-dimensional level space into 2^K qubit amplitudes.
/// Column d is the image of level d; columns are orthonormal, so
/// isometry^dag * isometry = I_D. The image spans the feasible subspace.
struct EncodingMap {
  EncodingScheme scheme;
  int dim_d = 0;
  int num_qubits = 0;
  Matrix isometry;  // 2^K x D

  /// M O M^dag: carries a level-space operator into the qubit space;
  /// zero on the orthogonal complement of the feasible subspace.
  Matrix map_operator(const Matrix& op_qudit) const;

  /// M^dag O M: restriction of a qubit-space operator to the level space.
  Matrix restrict_operator(const Matrix& op_qubit) const;

  /// M M^dag: rank-D projector onto the feasible subspace.
  Matrix feasible_projector() const;
};

EncodingMap build_encoding(EncodingScheme scheme, int dim_d);

/// Tensor product of n_factors copies of a per-mode map; factor 0 (mode 0)
/// sits in the least significant qubit block.
EncodingMap tensor_encoding(const EncodingMap& site_map, int n_factors);

}  // namespace qqa
