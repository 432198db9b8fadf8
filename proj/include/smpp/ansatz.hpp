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

#include "smpp/circuit.hpp"
#include "smpp/qubo.hpp"
#include "smpp/types.hpp"

namespace smpp {

/// Clamped continuous relaxation of a QUBO used to warm-start QAOA.
/// relaxed[i] lies in [epsilon, 1 - epsilon]; init_angles[i] =
/// 2 asin(sqrt(relaxed[i])) so that measuring RY(init_angles[i])|0> gives
/// P(x_i = 1) = relaxed[i].
struct WarmStart {
  Vector relaxed;
  Vector init_angles;
  double epsilon = 0.25;

  int n() const { return static_cast<int>(relaxed.size()); }
};

/// Hardware-efficient ansatz: an RY layer on every qubit, then r repetitions
/// of a descending CNOT ladder (control n-2 -> target n-1 first, down to
/// control 0 -> target 1) followed by another RY layer. Parameters are laid
/// out layer by layer, qubit-major: n * (r + 1) in total. Structure is
/// problem independent.
Circuit build_vqe(int n, int r);

/// Problem circuit: H on every qubit, then r repetitions of
///   RZ(2 a_k theta_i) per qubit, RZZ(2 a_k gamma_ij) per coupled pair in
///   lexicographic order, RX(2 b_k) per qubit.
/// Parameters are (a_1, b_1, ..., a_r, b_r), 2r in total. The Hamiltonian
/// offset carries no gate; it is added back at expectation time.
Circuit build_qaoa(const IsingModel& ham, int r);

/// Approximately maximizes the QUBO objective over the box [0,1]^n with
/// multi-start projected gradient ascent (20 starts, fixed step schedule),
/// then clamps every coordinate into [epsilon, 1 - epsilon]. Deterministic
/// per seed.
WarmStart solve_relaxation(const QuboModel& q, double epsilon, std::uint64_t seed);

/// QAOA with the H layer replaced by RY(init_angles[i]) and the mixer
/// replaced per qubit by RY(-init_angles[i]), RZ(-2 b_k), RY(init_angles[i])
/// (in application order). Cost layer and parameter layout as build_qaoa.
Circuit build_wqaoa(const IsingModel& ham, const WarmStart& ws, int r);

} // namespace smpp
