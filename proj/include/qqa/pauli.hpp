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

#include <cstdint>
#include <string>
#include <vector>

#include "qqa/linalg.hpp"

namespace qqa {

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// One real-weighted Pauli word. letters[q] acts on qubit q (little-endian);
/// the text form prints the most significant qubit first, e.g. "0.5 * ZX"
/// puts Z on qubit 1 and X on qubit 0.
struct PauliString {
  double coeff = 0.0;
  std::vector<PauliOp> letters;

  int num_qubits() const { return static_cast<int>(letters.size()); }
  int weight() const;
  std::vector<int> support() const;  // non-identity qubits, ascending
  std::string letters_string() const;  // MSB-first letters, no coefficient

  /// Dense 2^K x 2^K matrix coeff * (letters[K-1] x ... x letters[0]).
  Matrix to_matrix() const;
};

struct PauliSum {
  int num_qubits = 0;
  std::vector<PauliString> terms;  // distinct letter patterns, canonical order

  Matrix to_matrix() const;
  std::string to_text() const;  // one "coeff * LETTERS" line per term
};

PauliSum pauli_sum_from_text(const std::string& text);

/// Trace-inner-product decomposition of a Hermitian operator,
/// coeff(P) = Tr(P h) / 2^K. Terms below `drop_tol` in magnitude are
/// dropped; the survivors reconstruct h within 1e-10.
PauliSum pauli_decompose(const Matrix& h, double drop_tol = 1e-12);

/// CNOT tally for a first-order Trotter step. A CNOT between qubits i, j is
/// long range when |i - j| > 1 on the linear layout.
struct CircuitCost {
  long long cnot_nearest = 0;
  long long cnot_long_range = 0;
  long long single_qubit_rotations = 0;

  long long cnot_total() const { return cnot_nearest + cnot_long_range; }

  CircuitCost& operator+=(const CircuitCost& o);
  friend CircuitCost operator+(CircuitCost a, const CircuitCost& b) {
    return a += b;
  }
  friend bool operator==(const CircuitCost&, const CircuitCost&) = default;
};

/// Staircase cost model: a weight-w term (w >= 2) costs 2(w-1) CNOTs laid
/// out over its support in ascending qubit order; a weight-1 term costs one
/// single-qubit rotation; identity terms are free.
CircuitCost trotter_cost(const PauliSum& h);

/// p-layer figure: every count multiplied by p.
CircuitCost layered_cost(const PauliSum& h, int p);
CircuitCost layered_cost(const CircuitCost& per_layer, int p);

}  // namespace qqa
