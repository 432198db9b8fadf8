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
#include <map>

#include "smpp/circuit.hpp"
#include "smpp/qubo.hpp"
#include "smpp/types.hpp"

namespace smpp {

/// Dense amplitude vector over up to 24 qubits (256 MiB). Qubit i is bit i
/// of the basis index, qubit 0 least significant.
class StateVector {
public:
  explicit StateVector(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const ComplexVector& amplitudes() const { return amp_; }
  ComplexVector& amplitudes() { return amp_; }

  /// Maximum supported register width.
  static constexpr int max_qubits = 24;

private:
  int n_qubits_;
  ComplexVector amp_;
};

/// Applies one gate in place. The gate must be fully bound (param < 0);
/// use run() for parameterized circuits. Kernels update amplitude pairs via
/// index bit masking, O(2^n) per gate, and may parallelize internally over
/// disjoint index ranges with a deterministic result.
void apply_gate(StateVector& state, const Gate& gate);

/// Executes the circuit on |0...0> with the given parameter values.
StateVector run(const Circuit& circuit, const Vector& params);

/// Exact expectation of the diagonal Hamiltonian:
///   sum_b |amp_b|^2 * energy_of_basis(ham, b).
double expectation(const StateVector& state, const IsingModel& ham);

/// Same, with basis energies precomputed by energy_table().
double expectation(const StateVector& state, const Vector& energies);

/// |amp_b|^2 per basis index.
Vector probabilities(const StateVector& state);

/// shots i.i.d. measurement outcomes, returned as counts per basis index.
/// Deterministic per seed.
std::map<std::uint64_t, int> sample(const StateVector& state, int shots,
                                    std::uint64_t seed);

} // namespace smpp
