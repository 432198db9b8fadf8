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
#include <utility>
#include <vector>

#include "smpp/instance.hpp"
#include "smpp/types.hpp"

namespace smpp {

/// Penalized binary model, maximization sense:
///   objective(x) = sum_i linear[i] x_i + sum_{i<j} quadratic[{i,j}] x_i x_j
/// with linear[i] = v_i and quadratic[{i,j}] = -penalty exactly on the
/// conflicting pairs. Coefficients are doubles because they feed rotation
/// angles downstream.
struct QuboModel {
  int n = 0;
  Vector linear;
  std::map<std::pair<int, int>, double> quadratic; // keys i < j
  double penalty = 0.0;
};

/// Spin-space equivalent, minimization sense:
///   energy(z) = sum_i linear_terms[i] z_i
///             + sum_{i<j} couplings[{i,j}] z_i z_j + offset,  z_i in {-1,+1}
/// under the convention x_i = (1 - z_i) / 2 (z = -1 means selected), so that
/// energy(z(x)) == -objective(x) for every assignment.
struct IsingModel {
  int n = 0;
  Vector linear_terms; // theta_i
  std::map<std::pair<int, int>, double> couplings; // gamma_ij, keys i < j
  double offset = 0.0;
};

/// Penalty is fixed at 1 + max_i v_i: a violated pair always costs more than
/// any single location can contribute.
QuboModel build_qubo(const ConflictModel& conf, const std::vector<int>& values);

double objective(const QuboModel& q, const BitVector& x);

IsingModel to_ising(const QuboModel& q);

/// Energy of an explicit spin assignment (entries -1 or +1).
double energy(const IsingModel& ham, const std::vector<int>& spins);

/// Energy of the basis state with the given index; bit i set means x_i = 1,
/// i.e. z_i = -1.
double energy_of_basis(const IsingModel& ham, std::uint64_t index);

/// All 2^n basis energies, indexed by basis state. n <= 24.
Vector energy_table(const IsingModel& ham);

} // namespace smpp
