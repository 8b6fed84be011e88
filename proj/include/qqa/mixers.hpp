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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qqa/encoding.hpp"
#include "qqa/pauli.hpp"

namespace qqa {

/// A feasible-subspace-preserving mixing Hamiltonian. `pairs` lists the
/// level pairs (d, d') the operator swaps on the feasible block.
struct MixerSpec {
  std::optional<EncodingScheme> scheme;
  int dim_d = 0;
  int num_qubits = 0;
  std::vector<std::pair<int, int>> pairs;
  Matrix matrix;
  PauliSum pauli;

  /// JSON header (scheme, D, pairs) followed by the Pauli text block.
  std::string serialize() const;
};

/// M (|psi_d><psi_d'| + h.c.) M^dag: swaps exactly one pair of encoded
/// levels and annihilates everything else.
MixerSpec partial_mixer(const EncodingMap& map, int d, int d_prime);

enum class NamedMixer {
  BinaryH1, BinaryH2, BinaryH3,
  SymH1, SymH2, SymH3, SymOpt,
  UnaryH1, UnaryH2, UnaryH3,
  Standard,
};

std::string to_string(NamedMixer name);
NamedMixer named_mixer_from_string(const std::string& name);

/// The printed D=3 mixer family plus the standard sum-of-X mixer. The
/// D=3 names require dim_d == 3; Standard(n) reads its argument as the
/// qubit count.
MixerSpec named_mixer(NamedMixer name, int dim_d);

/// Sum of X on every qubit, optionally scaled.
MixerSpec standard_mixer(int num_qubits, double coeff = 1.0);

enum class MixerSearchMode { SingleTerm, ConnectedSet };

struct BestMixer {
  MixerSpec mixer;
  CircuitCost cost;  // per QAOA layer
  /// ConnectedSet mode: the members whose pair graphs jointly connect all
  /// levels. SingleTerm mode leaves this empty (the winner is `mixer`).
  std::vector<MixerSpec> members;
};

/// Cheapest feasibility-preserving mixer by Trotter CNOT count.
///
/// Candidates are controlled swap templates: the exact partial mixer for a
/// level pair with any subset of its projector controls dropped, admitted
/// only when the relaxed operator still equals a sum of partial mixers
/// (zero action outside the feasible block). Symmetric encodings and
/// binary encodings with D = 2^K take the standard mixer at zero CNOTs.
BestMixer best_candidate_mixer(EncodingScheme scheme, int dim_d,
                               MixerSearchMode mode);

/// End-to-end CNOT budget for p layers: state preparation plus p mixer
/// layers plus the final measurement. Computational-basis readout is free;
/// symmetric encodings pay D-2 nearest-neighbor CNOTs for the entangling
/// measurement. Preparation costs K CNOTs when the mixer ground state is
/// entangled, zero when it is a product state.
struct CnotBudget {
  CircuitCost prep;
  CircuitCost mixer_per_layer;
  CircuitCost measure;
  int layers = 0;

  CircuitCost total() const;
};
CnotBudget cnot_budget(EncodingScheme scheme, int dim_d, int p);

}  // namespace qqa
