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

#include "smpp/noise.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "smpp/ansatz.hpp"
#include "smpp/rng.hpp"
#include "smpp/statevector.hpp"

namespace smpp {

namespace {

using cd = std::complex<double>;

void validate_probability(double p, const char* name) {
  if (!(p >= 0.0 && p < 1.0))
    throw std::invalid_argument(std::string("noise: ") + name + " must be in [0, 1)");
}

// Pauli action on one qubit of a dense amplitude vector.
void apply_pauli(ComplexVector& amp, int qubit, int pauli) {
  const std::int64_t bit = std::int64_t{1} << qubit;
  const std::int64_t dim = amp.size();
  switch (pauli) {
  case 1: // X
    for (std::int64_t i = 0; i < dim; ++i)
      if (!(i & bit)) std::swap(amp[i], amp[i | bit]);
    break;
  case 2: // Y
    for (std::int64_t i = 0; i < dim; ++i)
      if (!(i & bit)) {
        const cd a0 = amp[i];
        amp[i] = cd(0, -1) * amp[i | bit];
        amp[i | bit] = cd(0, 1) * a0;
      }
    break;
  case 3: // Z
    for (std::int64_t i = 0; i < dim; ++i)
      if (i & bit) amp[i] = -amp[i];
    break;
  default:
    break; // identity
  }
}

struct Injection {
  int gate_index;
  int pauli_q0; // 0..3, 0 = identity (possible only for 2-qubit errors)
  int pauli_q1;
};

// Draws the error pattern for one shot without touching any state. The same
// generator later produces the measurement and readout draws, so a shot's
// entire randomness is one stream.
std::vector<Injection> draw_pattern(const Circuit& circuit, const NoiseConfig& cfg,
                                    Rng& rng) {
  std::vector<Injection> pattern;
  for (std::size_t k = 0; k < circuit.gates.size(); ++k) {
    const Gate& gate = circuit.gates[k];
    const bool two = is_two_qubit(gate.kind);
    const double p = two ? cfg.p2 : cfg.p1;
    if (p <= 0.0) continue;
    if (rng.uniform() >= p) continue;
    if (two) {
      // Uniform over the 15 non-identity two-qubit Paulis.
      const int code = static_cast<int>(rng.integer(15)) + 1;
      pattern.push_back({static_cast<int>(k), code >> 2, code & 3});
    } else {
      pattern.push_back({static_cast<int>(k), static_cast<int>(rng.integer(3)) + 1, 0});
    }
  }
  return pattern;
}

std::uint64_t measure(const std::vector<double>& cum, double r) {
  const auto it = std::lower_bound(cum.begin(), cum.end(), r * cum.back());
  return static_cast<std::uint64_t>(it == cum.end() ? cum.size() - 1
                                                    : it - cum.begin());
}

std::vector<double> cumulative(const ComplexVector& amp) {
  std::vector<double> cum(static_cast<std::size_t>(amp.size()));
  double acc = 0.0;
  for (std::int64_t i = 0; i < amp.size(); ++i) {
    acc += std::norm(amp[i]);
    cum[static_cast<std::size_t>(i)] = acc;
  }
  return cum;
}

} // namespace

void validate(const NoiseConfig& cfg) {
  validate_probability(cfg.p1, "p1");
  validate_probability(cfg.p2, "p2");
  validate_probability(cfg.p_readout, "p_readout");
  if (cfg.shots < 1) throw std::invalid_argument("noise: shots must be >= 1");
}

std::map<std::uint64_t, int> run_noisy(const Circuit& circuit, const Vector& params,
                                       const NoiseConfig& cfg) {
  validate(cfg);
  if (params.size() != circuit.n_params)
    throw std::invalid_argument("run_noisy: parameter count mismatch");

  // Bind once; per-shot replay then skips parameter lookups.
  std::vector<Gate> bound = circuit.gates;
  for (Gate& gate : bound) {
    gate.angle = bound_angle(gate, params);
    gate.param = -1;
  }
  Circuit bound_circuit{circuit.n_qubits, 0, bound};

  // Most shots carry no error and share the noiseless trajectory.
  const StateVector clean = run(bound_circuit, Vector(0));
  const std::vector<double> clean_cum = cumulative(clean.amplitudes());

  const int n = circuit.n_qubits;
  std::map<std::uint64_t, int> counts;

  // Per-shot derived seeds make every shot self-contained, so shots can run
  // in parallel and the merged histogram never depends on scheduling.
  const std::uint64_t shot_base = derive_seed(cfg.seed, 0x57a7);

#pragma omp parallel
  {
    std::map<std::uint64_t, int> local;
    StateVector scratch(n);

#pragma omp for schedule(static)
    for (int shot = 0; shot < cfg.shots; ++shot) {
      Rng rng(derive_seed(shot_base, static_cast<std::uint64_t>(shot)));
      const std::vector<Injection> pattern = draw_pattern(bound_circuit, cfg, rng);

      std::uint64_t outcome;
      if (pattern.empty()) {
        outcome = measure(clean_cum, rng.uniform());
      } else {
        scratch.amplitudes().setZero();
        scratch.amplitudes()[0] = 1.0;
        std::size_t next = 0;
        for (std::size_t k = 0; k < bound.size(); ++k) {
          apply_gate(scratch, bound[k]);
          while (next < pattern.size() &&
                 pattern[next].gate_index == static_cast<int>(k)) {
            const Gate& gate = bound[k];
            apply_pauli(scratch.amplitudes(), gate.q0, pattern[next].pauli_q0);
            if (is_two_qubit(gate.kind))
              apply_pauli(scratch.amplitudes(), gate.q1, pattern[next].pauli_q1);
            ++next;
          }
        }
        outcome = measure(cumulative(scratch.amplitudes()), rng.uniform());
      }

      if (cfg.p_readout > 0.0) {
        for (int qubit = 0; qubit < n; ++qubit)
          if (rng.uniform() < cfg.p_readout) outcome ^= (std::uint64_t{1} << qubit);
      }
      ++local[outcome];
    }

#pragma omp critical
    for (const auto& [index, count] : local) counts[index] += count;
  }
  return counts;
}

RunRecord solve_noisy(Algorithm algorithm, const IsingModel& ham, const QuboModel& q,
                      const ConflictModel& conf, int repetitions,
                      const OptimizerConfig& opt_cfg, const NoiseConfig& noise_cfg,
                      double epsilon) {
  if (ham.n != q.n || q.n != conf.n)
    throw std::invalid_argument("solve_noisy: inconsistent model sizes");
  if (ham.n > 14)
    throw capacity_error("solve_noisy: noise-aware solves support up to n = 14");
  validate(opt_cfg);
  validate(noise_cfg);
  const auto start_time = std::chrono::steady_clock::now();

  Circuit circuit;
  switch (algorithm) {
  case Algorithm::vqe:
    circuit = build_vqe(ham.n, repetitions);
    break;
  case Algorithm::qaoa:
    circuit = build_qaoa(ham, repetitions);
    break;
  case Algorithm::wqaoa: {
    const WarmStart ws = solve_relaxation(q, epsilon, opt_cfg.seed);
    circuit = build_wqaoa(ham, ws, repetitions);
    break;
  }
  }

  const CostFn cost = [&](const Vector& params) {
    const auto counts = run_noisy(circuit, params, noise_cfg);
    double total = 0.0;
    for (const auto& [index, count] : counts)
      total += static_cast<double>(count) * energy_of_basis(ham, index);
    return total / static_cast<double>(noise_cfg.shots);
  };

  Rng rng(derive_seed(opt_cfg.seed, 0x417a));
  Vector init(circuit.n_params);
  for (int i = 0; i < circuit.n_params; ++i)
    init[i] = rng.uniform(-std::numbers::pi, std::numbers::pi);

  const OptimizationResult opt = minimize(cost, circuit.n_params, opt_cfg, init);

  const auto final_counts = run_noisy(circuit, opt.best_params, noise_cfg);
  const BitVector selection = decode_and_repair(final_counts, q, conf);

  RunRecord record;
  record.algorithm = algorithm;
  record.n = ham.n;
  record.seed = opt_cfg.seed;
  record.selection = selection;
  record.objective_value = objective(q, selection);
  record.iterations = opt.iterations_used;
  record.mode = Mode::noise_aware;
  record.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return record;
}

} // namespace smpp
