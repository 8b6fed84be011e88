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

#include "qqa/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qqa {
namespace {

char letter_char(PauliOp op) {
  switch (op) {
    case PauliOp::I: return 'I';
    case PauliOp::X: return 'X';
    case PauliOp::Y: return 'Y';
    case PauliOp::Z: return 'Z';
  }
  return '?';
}

PauliOp letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliOp::I;
    case 'X': return PauliOp::X;
    case 'Y': return PauliOp::Y;
    case 'Z': return PauliOp::Z;
    default: throw std::invalid_argument(std::string("bad Pauli letter: ") + c);
  }
}

// Action of a Pauli word on basis state |y>: P|y> = phase(y) |y ^ xmask>.
struct WordAction {
  long long xmask = 0;   // bits flipped by X or Y
  long long ymask = 0;   // Y positions
  long long zmask = 0;   // Z positions
  int y_count = 0;

  static WordAction from(const std::vector<PauliOp>& letters) {
    WordAction w;
    for (size_t q = 0; q < letters.size(); ++q) {
      switch (letters[q]) {
        case PauliOp::I: break;
        case PauliOp::X: w.xmask |= 1LL << q; break;
        case PauliOp::Y:
          w.xmask |= 1LL << q;
          w.ymask |= 1LL << q;
          ++w.y_count;
          break;
        case PauliOp::Z: w.zmask |= 1LL << q; break;
      }
    }
    return w;
  }

  Complex phase(long long y) const {
    // Y|0> = i|1>, Y|1> = -i|0>; Z|b> = (-1)^b |b>.
    int y_ones = std::popcount(static_cast<unsigned long long>(y & ymask));
    int z_ones = std::popcount(static_cast<unsigned long long>(y & zmask));
    int minus = y_ones + z_ones;
    Complex ph = (minus % 2 == 0) ? 1.0 : -1.0;
    switch (y_count % 4) {
      case 0: return ph;
      case 1: return ph * Complex(0, 1);
      case 2: return -ph;
      default: return ph * Complex(0, -1);
    }
  }
};

std::vector<PauliOp> letters_from_code(long long code, int num_qubits) {
  std::vector<PauliOp> letters(num_qubits);
  for (int q = 0; q < num_qubits; ++q)
    letters[q] = static_cast<PauliOp>((code >> (2 * q)) & 3);
  return letters;
}

}  // namespace

int PauliString::weight() const {
  int w = 0;
  for (PauliOp op : letters)
    if (op != PauliOp::I) ++w;
  return w;
}

std::vector<int> PauliString::support() const {
  std::vector<int> s;
  for (int q = 0; q < num_qubits(); ++q)
    if (letters[q] != PauliOp::I) s.push_back(q);
  return s;
}

std::string PauliString::letters_string() const {
  std::string s;
  for (int q = num_qubits() - 1; q >= 0; --q) s.push_back(letter_char(letters[q]));
  return s;
}

Matrix PauliString::to_matrix() const {
  const long long dim = 1LL << num_qubits();
  Matrix m = Matrix::Zero(dim, dim);
  const WordAction w = WordAction::from(letters);
  for (long long y = 0; y < dim; ++y) m(y ^ w.xmask, y) += coeff * w.phase(y);
  return m;
}

Matrix PauliSum::to_matrix() const {
  const long long dim = 1LL << num_qubits;
  Matrix m = Matrix::Zero(dim, dim);
  for (const PauliString& t : terms) {
    const WordAction w = WordAction::from(t.letters);
    for (long long y = 0; y < dim; ++y) m(y ^ w.xmask, y) += t.coeff * w.phase(y);
  }
  return m;
}

std::string PauliSum::to_text() const {
  std::ostringstream out;
  out.precision(17);
  for (const PauliString& t : terms)
    out << t.coeff << " * " << t.letters_string() << "\n";
  return out.str();
}

PauliSum pauli_sum_from_text(const std::string& text) {
  PauliSum sum;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double coeff;
    std::string star, word;
    if (!(ls >> coeff >> star >> word) || star != "*")
      throw std::invalid_argument("bad Pauli line: " + line);
    PauliString term;
    term.coeff = coeff;
    term.letters.resize(word.size());
    for (size_t i = 0; i < word.size(); ++i)
      term.letters[word.size() - 1 - i] = letter_from_char(word[i]);
    if (sum.terms.empty())
      sum.num_qubits = term.num_qubits();
    else if (term.num_qubits() != sum.num_qubits)
      throw std::invalid_argument("inconsistent qubit counts in Pauli text");
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

PauliSum pauli_decompose(const Matrix& h, double drop_tol) {
  if (h.rows() != h.cols())
    throw NotHermitianError("matrix is not square");
  long long dim = h.rows();
  int k = 0;
  while ((1LL << k) < dim) ++k;
  if ((1LL << k) != dim)
    throw DimensionMismatchError("matrix dimension is not a power of two");
  if (!is_hermitian(h))
    throw NotHermitianError("pauli_decompose input");

  PauliSum sum;
  sum.num_qubits = k;
  const long long n_words = 1LL << (2 * k);
  for (long long code = 0; code < n_words; ++code) {
    std::vector<PauliOp> letters = letters_from_code(code, k);
    const WordAction w = WordAction::from(letters);
    // Tr(P h) = sum_y phase(y) h(y, y ^ xmask); P is Hermitian so the trace
    // is real for Hermitian h.
    Complex tr = 0.0;
    for (long long y = 0; y < dim; ++y) tr += w.phase(y) * h(y, y ^ w.xmask);
    double coeff = tr.real() / static_cast<double>(dim);
    if (std::abs(coeff) >= drop_tol)
      sum.terms.push_back(PauliString{coeff, std::move(letters)});
  }
  return sum;
}

CircuitCost& CircuitCost::operator+=(const CircuitCost& o) {
  cnot_nearest += o.cnot_nearest;
  cnot_long_range += o.cnot_long_range;
  single_qubit_rotations += o.single_qubit_rotations;
  return *this;
}

CircuitCost trotter_cost(const PauliSum& h) {
  CircuitCost cost;
  for (const PauliString& t : h.terms) {
    const std::vector<int> sup = t.support();
    if (sup.empty()) continue;
    if (sup.size() == 1) {
      cost.single_qubit_rotations += 1;
      continue;
    }
    // CNOT staircase down and back up over the sorted support.
    for (size_t i = 0; i + 1 < sup.size(); ++i) {
      if (sup[i + 1] - sup[i] > 1)
        cost.cnot_long_range += 2;
      else
        cost.cnot_nearest += 2;
    }
    cost.single_qubit_rotations += 1;
  }
  return cost;
}

CircuitCost layered_cost(const CircuitCost& per_layer, int p) {
  if (p < 1) throw std::invalid_argument("layer count must be >= 1");
  return CircuitCost{per_layer.cnot_nearest * p, per_layer.cnot_long_range * p,
                     per_layer.single_qubit_rotations * p};
}

CircuitCost layered_cost(const PauliSum& h, int p) {
  return layered_cost(trotter_cost(h), p);
}

}  // namespace qqa
