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

#include <stdexcept>
#include <string>

namespace qqa {

struct NotHermitianError : std::runtime_error {
  explicit NotHermitianError(const std::string& what)
      : std::runtime_error("not Hermitian: " + what) {}
};

struct DimensionMismatchError : std::invalid_argument {
  explicit DimensionMismatchError(const std::string& what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

struct IndexOutOfRangeError : std::out_of_range {
  explicit IndexOutOfRangeError(const std::string& what)
      : std::out_of_range("index out of range: " + what) {}
};

struct DimensionTooSmallError : std::invalid_argument {
  explicit DimensionTooSmallError(const std::string& what)
      : std::invalid_argument("dimension too small: " + what) {}
};

struct NameNotApplicableError : std::invalid_argument {
  explicit NameNotApplicableError(const std::string& what)
      : std::invalid_argument("mixer name not applicable: " + what) {}
};

struct DegenerateCubicError : std::runtime_error {
  explicit DegenerateCubicError(const std::string& what)
      : std::runtime_error("degenerate cubic: " + what) {}
};

struct MemoryLimitError : std::invalid_argument {
  explicit MemoryLimitError(const std::string& what)
      : std::invalid_argument("memory limit: " + what) {}
};

struct NoisyPureStateError : std::invalid_argument {
  explicit NoisyPureStateError(const std::string& what)
      : std::invalid_argument("pure state not allowed under noise: " + what) {}
};

}  // namespace qqa
