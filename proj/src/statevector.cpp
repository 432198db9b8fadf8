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

#include "smpp/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "smpp/rng.hpp"

namespace smpp {

namespace {

using cd = std::complex<double>;

constexpr std::int64_t kParallelCutoff = std::int64_t{1} << 15;

// Applies a dense 2x2 matrix to the amplitude pairs split by qubit t.
void apply_one_qubit(ComplexVector& amp, int t, cd m00, cd m01, cd m10, cd m11) {
  const std::int64_t pairs = amp.size() >> 1;
  const std::int64_t low_mask = (std::int64_t{1} << t) - 1;
  const std::int64_t bit = std::int64_t{1} << t;
#pragma omp parallel for schedule(static) if (pairs >= kParallelCutoff)
  for (std::int64_t p = 0; p < pairs; ++p) {
    const std::int64_t i0 = ((p & ~low_mask) << 1) | (p & low_mask);
    const std::int64_t i1 = i0 | bit;
    const cd a0 = amp[i0];
    const cd a1 = amp[i1];
    amp[i0] = m00 * a0 + m01 * a1;
    amp[i1] = m10 * a0 + m11 * a1;
  }
}

// Diagonal phase by the value of bit t: phase0 on 0, phase1 on 1.
void apply_phase_by_bit(ComplexVector& amp, int t, cd phase0, cd phase1) {
  const std::int64_t dim = amp.size();
  const std::int64_t bit = std::int64_t{1} << t;
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t i = 0; i < dim; ++i)
    amp[i] *= (i & bit) ? phase1 : phase0;
}

void apply_rzz(ComplexVector& amp, int a, int b, double angle) {
  const cd even = std::polar(1.0, -angle / 2.0); // z_a z_b = +1
  const cd odd = std::polar(1.0, angle / 2.0);
  const std::int64_t dim = amp.size();
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (std::int64_t i = 0; i < dim; ++i) {
    const bool parity = (((i >> a) ^ (i >> b)) & 1) != 0;
    amp[i] *= parity ? odd : even;
  }
}

void apply_cnot(ComplexVector& amp, int control, int target) {
  const std::int64_t pairs = amp.size() >> 1;
  const std::int64_t low_mask = (std::int64_t{1} << target) - 1;
  const std::int64_t tbit = std::int64_t{1} << target;
  const std::int64_t cbit = std::int64_t{1} << control;
#pragma omp parallel for schedule(static) if (pairs >= kParallelCutoff)
  for (std::int64_t p = 0; p < pairs; ++p) {
    const std::int64_t i0 = ((p & ~low_mask) << 1) | (p & low_mask);
    if (i0 & cbit) std::swap(amp[i0], amp[i0 | tbit]);
  }
}

void check_qubit(int q, int n, const char* what) {
  if (q < 0 || q >= n)
    throw std::invalid_argument(std::string(what) + ": qubit index out of range");
}

void dispatch(ComplexVector& amp, int n, GateKind kind, int q0, int q1, double angle) {
  check_qubit(q0, n, "apply_gate");
  if (is_two_qubit(kind)) {
    check_qubit(q1, n, "apply_gate");
    if (q0 == q1) throw std::invalid_argument("apply_gate: two-qubit gate needs distinct qubits");
  }
  const double half = angle / 2.0;
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  switch (kind) {
  case GateKind::h:
    apply_one_qubit(amp, q0, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
    break;
  case GateKind::rx:
    apply_one_qubit(amp, q0, std::cos(half), cd(0, -std::sin(half)),
                    cd(0, -std::sin(half)), std::cos(half));
    break;
  case GateKind::ry:
    apply_one_qubit(amp, q0, std::cos(half), -std::sin(half), std::sin(half),
                    std::cos(half));
    break;
  case GateKind::rz:
    apply_phase_by_bit(amp, q0, std::polar(1.0, -half), std::polar(1.0, half));
    break;
  case GateKind::rzz:
    apply_rzz(amp, q0, q1, angle);
    break;
  case GateKind::cnot:
    apply_cnot(amp, q0, q1);
    break;
  }
}

} // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
  case GateKind::h: return "h";
  case GateKind::rx: return "rx";
  case GateKind::ry: return "ry";
  case GateKind::rz: return "rz";
  case GateKind::rzz: return "rzz";
  case GateKind::cnot: return "cnot";
  }
  return "unknown";
}

double bound_angle(const Gate& gate, const Vector& params) {
  if (gate.param < 0) return gate.angle;
  if (gate.param >= params.size())
    throw std::invalid_argument("bound_angle: parameter index out of range");
  return gate.angle + gate.coeff * params[gate.param];
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("StateVector: need at least one qubit");
  if (n_qubits > max_qubits)
    throw capacity_error("StateVector: at most " + std::to_string(max_qubits) + " qubits");
  amp_ = ComplexVector::Zero(std::int64_t{1} << n_qubits);
  amp_[0] = 1.0;
}

void apply_gate(StateVector& state, const Gate& gate) {
  if (gate.param >= 0)
    throw std::invalid_argument("apply_gate: gate has an unbound parameter");
  dispatch(state.amplitudes(), state.n_qubits(), gate.kind, gate.q0, gate.q1,
           gate.angle);
}

StateVector run(const Circuit& circuit, const Vector& params) {
  if (params.size() != circuit.n_params)
    throw std::invalid_argument("run: expected " + std::to_string(circuit.n_params) +
                                " parameters, got " + std::to_string(params.size()));
  StateVector state(circuit.n_qubits);
  for (const Gate& gate : circuit.gates)
    dispatch(state.amplitudes(), circuit.n_qubits, gate.kind, gate.q0, gate.q1,
             bound_angle(gate, params));
  return state;
}

double expectation(const StateVector& state, const IsingModel& ham) {
  if (ham.n != state.n_qubits())
    throw std::invalid_argument("expectation: Hamiltonian size != qubit count");
  const auto& amp = state.amplitudes();
  double total = 0.0;
  for (std::int64_t b = 0; b < amp.size(); ++b)
    total += std::norm(amp[b]) * energy_of_basis(ham, static_cast<std::uint64_t>(b));
  return total;
}

double expectation(const StateVector& state, const Vector& energies) {
  const auto& amp = state.amplitudes();
  if (energies.size() != amp.size())
    throw std::invalid_argument("expectation: energy table size != state size");
  const std::int64_t dim = amp.size();

  // Fixed chunking makes the reduction order independent of thread count.
  constexpr int kChunks = 256;
  const int chunks = dim < kChunks ? 1 : kChunks;
  const std::int64_t step = (dim + chunks - 1) / chunks;
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
#pragma omp parallel for schedule(static) if (dim >= kParallelCutoff)
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t lo = c * step;
    const std::int64_t hi = std::min(dim, lo + step);
    double sum = 0.0;
    for (std::int64_t i = lo; i < hi; ++i) sum += std::norm(amp[i]) * energies[i];
    partial[static_cast<std::size_t>(c)] = sum;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

Vector probabilities(const StateVector& state) {
  const auto& amp = state.amplitudes();
  Vector probs(amp.size());
  for (std::int64_t i = 0; i < amp.size(); ++i) probs[i] = std::norm(amp[i]);
  return probs;
}

std::map<std::uint64_t, int> sample(const StateVector& state, int shots,
                                    std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  const auto& amp = state.amplitudes();
  std::vector<double> cum(static_cast<std::size_t>(amp.size()));
  double acc = 0.0;
  for (std::int64_t i = 0; i < amp.size(); ++i) {
    acc += std::norm(amp[i]);
    cum[static_cast<std::size_t>(i)] = acc;
  }

  Rng rng(derive_seed(seed, 0x5a3));
  std::map<std::uint64_t, int> counts;
  for (int s = 0; s < shots; ++s) {
    const double r = rng.uniform() * acc;
    const auto it = std::lower_bound(cum.begin(), cum.end(), r);
    const auto idx = static_cast<std::uint64_t>(
        it == cum.end() ? amp.size() - 1 : it - cum.begin());
    ++counts[idx];
  }
  return counts;
}

} // namespace smpp
