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
#include "smpp/optimizer.hpp"
#include "smpp/types.hpp"

namespace smpp {

/// Parametric gate-noise channel: uniform depolarizing injection after each
/// gate plus independent readout bit flips. Magnitudes default to values
/// typical of current superconducting devices.
struct NoiseConfig {
  double p1 = 0.001;      // error probability after each 1-qubit gate
  double p2 = 0.01;       // error probability after each 2-qubit gate
  double p_readout = 0.02; // per-qubit readout flip probability
  int shots = 1024;
  std::uint64_t seed = 0;
};

void validate(const NoiseConfig& cfg);

/// Stochastic Pauli trajectory sampling. Each shot evolves a fresh
/// statevector; after every gate a uniformly chosen non-identity Pauli (on
/// the gate's qubits) is injected with probability p1 or p2, the final state
/// is measured once, and each result bit flips with p_readout. Shots use
/// derived per-shot seeds, so the histogram is deterministic regardless of
/// how the shots are scheduled.
std::map<std::uint64_t, int> run_noisy(const Circuit& circuit, const Vector& params,
                                       const NoiseConfig& cfg);

/// Variational solve against the empirical shot histogram: the cost is
/// sum_b freq(b)/shots * energy(b), decoding uses the empirical mode.
/// Restricted to n <= 14 locations.
RunRecord solve_noisy(Algorithm algorithm, const IsingModel& ham, const QuboModel& q,
                      const ConflictModel& conf, int repetitions,
                      const OptimizerConfig& opt_cfg, const NoiseConfig& noise_cfg,
                      double epsilon = 0.25);

} // namespace smpp
