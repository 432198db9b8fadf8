// Copyright 2026 The smpp authors
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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace smpp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// One binary decision per location, x_i in {0, 1}.
using BitVector = std::vector<int>;

enum class Algorithm { vqe, qaoa, wqaoa };
enum class Mode { noise_free, noise_aware };

std::string to_string(Algorithm a);
std::string to_string(Mode m);
Algorithm parse_algorithm(std::string_view name);

/// Thrown when a request exceeds a hard size limit (qubit count, oracle
/// width, noise-aware location cap).
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Basis-state index convention: bit i of the index is x_i, qubit 0 is the
/// least significant bit. Fixed globally; every decode relies on it.
std::uint64_t bits_to_index(const BitVector& x);
BitVector index_to_bits(std::uint64_t index, int n);

/// Lexicographic order on bit sequences read x_0, x_1, ... (so bit 0 is the
/// most significant position). Deterministic tie-breaker everywhere.
bool lex_less(std::uint64_t a, std::uint64_t b);

} // namespace smpp
