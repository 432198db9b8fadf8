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

#include "smpp/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "smpp/rng.hpp"

namespace smpp {

Circuit build_vqe(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("build_vqe: n and r must be >= 1");
  Circuit circ;
  circ.n_qubits = n;
  circ.n_params = n * (r + 1);

  int p = 0;
  for (int q = 0; q < n; ++q)
    circ.gates.push_back({GateKind::ry, q, -1, 0.0, p++, 1.0});
  for (int rep = 0; rep < r; ++rep) {
    for (int c = n - 2; c >= 0; --c)
      circ.gates.push_back({GateKind::cnot, c, c + 1});
    for (int q = 0; q < n; ++q)
      circ.gates.push_back({GateKind::ry, q, -1, 0.0, p++, 1.0});
  }
  return circ;
}

Circuit build_qaoa(const IsingModel& ham, int r) {
  if (r < 1) throw std::invalid_argument("build_qaoa: r must be >= 1");
  Circuit circ;
  circ.n_qubits = ham.n;
  circ.n_params = 2 * r;

  for (int q = 0; q < ham.n; ++q) circ.gates.push_back({GateKind::h, q});
  for (int rep = 0; rep < r; ++rep) {
    const int alpha = 2 * rep;
    const int beta = 2 * rep + 1;
    for (int q = 0; q < ham.n; ++q)
      circ.gates.push_back({GateKind::rz, q, -1, 0.0, alpha, 2.0 * ham.linear_terms[q]});
    for (const auto& [pair, gamma] : ham.couplings)
      circ.gates.push_back({GateKind::rzz, pair.first, pair.second, 0.0, alpha, 2.0 * gamma});
    for (int q = 0; q < ham.n; ++q)
      circ.gates.push_back({GateKind::rx, q, -1, 0.0, beta, 2.0});
  }
  return circ;
}

namespace {

double box_objective(const QuboModel& q, const Vector& x) {
  double value = q.linear.dot(x);
  for (const auto& [pair, w] : q.quadratic)
    value += w * x[pair.first] * x[pair.second];
  return value;
}

Vector box_gradient(const QuboModel& q, const Vector& x) {
  Vector g = q.linear;
  for (const auto& [pair, w] : q.quadratic) {
    g[pair.first] += w * x[pair.second];
    g[pair.second] += w * x[pair.first];
  }
  return g;
}

} // namespace

WarmStart solve_relaxation(const QuboModel& q, double epsilon, std::uint64_t seed) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("solve_relaxation: epsilon must be in (0, 0.5)");

  // Ascent step sized by a bound on the objective's curvature/slope.
  double lipschitz = 0.0;
  for (int i = 0; i < q.n; ++i) {
    double row = std::abs(q.linear[i]);
    for (const auto& [pair, w] : q.quadratic)
      if (pair.first == i || pair.second == i) row += std::abs(w);
    lipschitz = std::max(lipschitz, row);
  }
  const double step = 1.0 / (1.0 + lipschitz);
  constexpr int kStarts = 20;
  constexpr int kIterations = 300;

  Rng rng(derive_seed(seed, 0x7e1a));
  Vector best = Vector::Constant(q.n, 0.5);
  double best_value = -std::numeric_limits<double>::infinity();

  for (int s = 0; s < kStarts; ++s) {
    Vector x(q.n);
    if (s == 0) {
      x.setConstant(0.5);
    } else {
      for (int i = 0; i < q.n; ++i) x[i] = rng.uniform();
    }
    for (int it = 0; it < kIterations; ++it) {
      x += step * box_gradient(q, x);
      x = x.cwiseMax(0.0).cwiseMin(1.0);
    }
    const double value = box_objective(q, x);
    if (value > best_value) {
      best_value = value;
      best = x;
    }
  }

  WarmStart ws;
  ws.epsilon = epsilon;
  ws.relaxed = best.cwiseMax(epsilon).cwiseMin(1.0 - epsilon);
  ws.init_angles = Vector(q.n);
  for (int i = 0; i < q.n; ++i)
    ws.init_angles[i] = 2.0 * std::asin(std::sqrt(ws.relaxed[i]));
  return ws;
}

Circuit build_wqaoa(const IsingModel& ham, const WarmStart& ws, int r) {
  if (r < 1) throw std::invalid_argument("build_wqaoa: r must be >= 1");
  if (ws.n() != ham.n)
    throw std::invalid_argument("build_wqaoa: warm start size != Hamiltonian size");
  Circuit circ;
  circ.n_qubits = ham.n;
  circ.n_params = 2 * r;

  for (int q = 0; q < ham.n; ++q)
    circ.gates.push_back({GateKind::ry, q, -1, ws.init_angles[q]});
  for (int rep = 0; rep < r; ++rep) {
    const int alpha = 2 * rep;
    const int beta = 2 * rep + 1;
    for (int q = 0; q < ham.n; ++q)
      circ.gates.push_back({GateKind::rz, q, -1, 0.0, alpha, 2.0 * ham.linear_terms[q]});
    for (const auto& [pair, gamma] : ham.couplings)
      circ.gates.push_back({GateKind::rzz, pair.first, pair.second, 0.0, alpha, 2.0 * gamma});
    for (int q = 0; q < ham.n; ++q) {
      circ.gates.push_back({GateKind::ry, q, -1, -ws.init_angles[q]});
      circ.gates.push_back({GateKind::rz, q, -1, 0.0, beta, -2.0});
      circ.gates.push_back({GateKind::ry, q, -1, ws.init_angles[q]});
    }
  }
  return circ;
}

} // namespace smpp
