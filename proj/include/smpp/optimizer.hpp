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
#include <functional>
#include <optional>
#include <vector>

#include "smpp/oracle.hpp"
#include "smpp/qubo.hpp"
#include "smpp/types.hpp"

namespace smpp {

struct OptimizerConfig {
  /// Budget of cost-function evaluations.
  int max_iterations = 100;
  /// Initial trust-region radius (radians for circuit parameters).
  double initial_step = 0.5;
  /// Terminate once the trust-region radius falls below this.
  double convergence_tol = 1e-6;
  /// Seed for random initial parameters (and the warm-start relaxation).
  std::uint64_t seed = 0;
};

void validate(const OptimizerConfig& cfg);

struct OptimizationResult {
  Vector best_params;
  double best_cost = 0.0;
  int iterations_used = 0;
  std::vector<double> cost_history; // one entry per evaluation, in order
};

using CostFn = std::function<double(const Vector&)>;

/// Derivative-free minimization in the COBYLA family: a simplex-based linear
/// model drives trust-region steps, with Nelder-Mead moves accepted as a
/// fallback whenever the simplex degenerates. Starts from x0 when given,
/// otherwise from a uniform random point in [-pi, pi]^dim drawn from
/// cfg.seed. Deterministic.
OptimizationResult minimize(const CostFn& cost, int dim, const OptimizerConfig& cfg,
                            const std::optional<Vector>& x0 = std::nullopt);

/// Full noise-free variational solve: builds the requested circuit, draws
/// initial parameters uniformly from [-pi, pi] (the warm start fixes only
/// the W-QAOA init layer, not the loop parameters), minimizes the exact
/// Hamiltonian expectation, then decodes and repairs the final state.
/// RunRecord.quality is left at -1 for the caller to fill.
RunRecord solve(Algorithm algorithm, const IsingModel& ham, const QuboModel& q,
                const ConflictModel& conf, int repetitions,
                const OptimizerConfig& cfg, double epsilon = 0.25);

} // namespace smpp
