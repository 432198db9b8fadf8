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

#include <cmath>
#include <complex>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "smpp/circuit.hpp"
#include "smpp/instance.hpp"
#include "smpp/oracle.hpp"
#include "smpp/qubo.hpp"
#include "smpp/rng.hpp"
#include "smpp/types.hpp"

namespace smpp::testing {

using cd = std::complex<double>;

// ---------------------------------------------------------------------------
// Dense reference route: full 2^n x 2^n unitaries assembled from Kronecker
// products and explicit two-qubit embeddings, applied by matrix-vector
// multiplication. Entirely independent of the kernel index arithmetic.
// ---------------------------------------------------------------------------

inline Eigen::Matrix2cd one_qubit_matrix(GateKind kind, double angle) {
  Eigen::Matrix2cd m;
  const double h = angle / 2.0;
  switch (kind) {
  case GateKind::h:
    m << 1, 1, 1, -1;
    m /= std::sqrt(2.0);
    break;
  case GateKind::rx:
    m << cd(std::cos(h), 0), cd(0, -std::sin(h)), cd(0, -std::sin(h)), cd(std::cos(h), 0);
    break;
  case GateKind::ry:
    m << cd(std::cos(h), 0), cd(-std::sin(h), 0), cd(std::sin(h), 0), cd(std::cos(h), 0);
    break;
  case GateKind::rz:
    m << std::polar(1.0, -h), cd(0, 0), cd(0, 0), std::polar(1.0, h);
    break;
  default:
    throw std::invalid_argument("one_qubit_matrix: not a one-qubit gate");
  }
  return m;
}

inline ComplexMatrix identity_matrix(int dim) {
  return ComplexMatrix::Identity(dim, dim);
}

// Full unitary for a gate on an n-qubit register (qubit 0 least significant,
// so it sits rightmost in the Kronecker chain).
inline ComplexMatrix full_unitary(const Gate& gate, int n) {
  if (!is_two_qubit(gate.kind)) {
    const auto u = one_qubit_matrix(gate.kind, gate.angle);
    const int below = gate.q0;
    const int above = n - 1 - gate.q0;
    return Eigen::kroneckerProduct(
               identity_matrix(1 << above),
               Eigen::kroneckerProduct(u, identity_matrix(1 << below)).eval())
        .eval();
  }

  // Two-qubit gates: build the 4x4 action on (q0, q1) and embed explicitly.
  Eigen::Matrix4cd u4 = Eigen::Matrix4cd::Zero();
  if (gate.kind == GateKind::cnot) {
    // basis ordering: index = bit(q0) + 2 * bit(q1); q0 is the control
    u4(0, 0) = 1;
    u4(2, 2) = 1;
    u4(3, 1) = 1;
    u4(1, 3) = 1;
  } else { // rzz
    const cd even = std::polar(1.0, -gate.angle / 2.0);
    const cd odd = std::polar(1.0, gate.angle / 2.0);
    u4(0, 0) = even;
    u4(1, 1) = odd;
    u4(2, 2) = odd;
    u4(3, 3) = even;
  }

  const int dim = 1 << n;
  ComplexMatrix full = ComplexMatrix::Zero(dim, dim);
  const int b0 = 1 << gate.q0;
  const int b1 = 1 << gate.q1;
  for (int col = 0; col < dim; ++col) {
    const int sub_col = ((col & b0) ? 1 : 0) + ((col & b1) ? 2 : 0);
    const int rest = col & ~(b0 | b1);
    for (int sub_row = 0; sub_row < 4; ++sub_row) {
      const cd v = u4(sub_row, sub_col);
      if (v == cd(0, 0)) continue;
      const int row = rest | ((sub_row & 1) ? b0 : 0) | ((sub_row & 2) ? b1 : 0);
      full(row, col) = v;
    }
  }
  return full;
}

inline ComplexVector dense_apply(const Gate& gate, const ComplexVector& state, int n) {
  return full_unitary(gate, n) * state;
}

// ---------------------------------------------------------------------------
// Independent exact solver: depth-first branch and prune over the conflict
// graph, a different strategy from the oracle's exhaustive index scan.
// ---------------------------------------------------------------------------

inline void bp_recurse(int i, int n, double value, std::uint64_t chosen,
                       const std::vector<std::uint64_t>& conflict_mask,
                       const std::vector<double>& vals,
                       const std::vector<double>& suffix_sum, double& best) {
  if (value + suffix_sum[static_cast<std::size_t>(i)] <= best) return; // prune
  if (i == n) {
    if (value > best) best = value;
    return;
  }
  // take location i when compatible with everything already chosen
  if ((chosen & conflict_mask[static_cast<std::size_t>(i)]) == 0)
    bp_recurse(i + 1, n, value + vals[static_cast<std::size_t>(i)],
               chosen | (std::uint64_t{1} << i), conflict_mask, vals, suffix_sum, best);
  bp_recurse(i + 1, n, value, chosen, conflict_mask, vals, suffix_sum, best);
}

inline double branch_and_prune_best(const ConflictModel& conf,
                                    const std::vector<int>& values) {
  const int n = conf.n;
  std::vector<std::uint64_t> conflict_mask(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && conf.conflict(i, j))
        conflict_mask[static_cast<std::size_t>(i)] |= (std::uint64_t{1} << j);

  std::vector<double> vals(values.begin(), values.end());
  std::vector<double> suffix_sum(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = n - 1; i >= 0; --i)
    suffix_sum[static_cast<std::size_t>(i)] =
        suffix_sum[static_cast<std::size_t>(i) + 1] + vals[static_cast<std::size_t>(i)];

  double best = 0.0;
  bp_recurse(0, n, 0.0, 0, conflict_mask, vals, suffix_sum, best);
  return best;
}

// ---------------------------------------------------------------------------
// Misc fixtures
// ---------------------------------------------------------------------------

// Hand-built conflict model from explicit pairs; conflicting pairs get a
// rotation/transition margin of 1 second.
inline ConflictModel make_conflicts(int n, const std::vector<std::pair<int, int>>& pairs) {
  ConflictModel conf;
  conf.n = n;
  conf.rotation_time = Matrix::Zero(n, n);
  conf.transition_time = Matrix::Constant(n, n, 100.0);
  conf.transition_time.diagonal().setZero();
  conf.conflict = BoolMatrix::Constant(n, n, false);
  for (auto [i, j] : pairs) {
    conf.rotation_time(i, j) = conf.rotation_time(j, i) = 101.0;
    conf.conflict(i, j) = conf.conflict(j, i) = true;
  }
  return conf;
}

inline ComplexVector random_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  ComplexVector v(std::int64_t{1} << n);
  for (std::int64_t i = 0; i < v.size(); ++i)
    v[i] = cd(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  v /= v.norm();
  return v;
}

inline Gate random_gate(int n, Rng& rng) {
  // two-qubit kinds need two distinct qubits
  const int kinds = n >= 2 ? 6 : 4;
  const auto kind = static_cast<GateKind>(rng.integer(static_cast<std::uint64_t>(kinds)));
  Gate gate;
  gate.kind = kind;
  gate.q0 = static_cast<int>(rng.integer(static_cast<std::uint64_t>(n)));
  if (is_two_qubit(kind)) {
    do {
      gate.q1 = static_cast<int>(rng.integer(static_cast<std::uint64_t>(n)));
    } while (gate.q1 == gate.q0);
  }
  if (has_angle(kind)) gate.angle = rng.uniform(-3.14159, 3.14159);
  return gate;
}

} // namespace smpp::testing
