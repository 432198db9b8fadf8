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

#include "smpp/instance.hpp"
#include "smpp/qubo.hpp"
#include "smpp/types.hpp"

namespace smpp {

struct OracleSolution {
  BitVector best_x;
  double best_value = 0.0;
  std::uint64_t evaluations = 0; // always 2^n
};

/// One solve's outcome. quality and optimal_value are filled in by whoever
/// holds the oracle solution (bench or the CLI); they are -1 until then.
struct RunRecord {
  Algorithm algorithm = Algorithm::qaoa;
  int n = 0;
  std::uint64_t seed = 0;
  BitVector selection;
  double objective_value = 0.0;
  double quality = -1.0;
  double optimal_value = -1.0;
  double wall_time_s = 0.0;
  int iterations = 0;
  Mode mode = Mode::noise_free;
};

/// Exhaustive scan of all 2^n assignments; among the conflict-free ones
/// maximizes the summed value. Ties break toward the lexicographically
/// smallest bitvector. n <= 26.
OracleSolution brute_force(const QuboModel& q, const ConflictModel& conf);

/// True iff no selected pair conflicts.
bool is_feasible(const BitVector& x, const ConflictModel& conf);

/// Picks the most probable bitstring (ties toward the lexicographically
/// smallest), then repairs: while infeasible, pick the violated pair with
/// the largest rotation-over-transition excess (ties lexicographic) and drop
/// the endpoint with the lower value (value ties drop the higher index).
/// The result is always conflict-free.
BitVector decode_and_repair(const Vector& probs, const QuboModel& q,
                            const ConflictModel& conf);

/// Same on an empirical outcome histogram (basis index -> count/weight).
BitVector decode_and_repair(const std::map<std::uint64_t, int>& counts,
                            const QuboModel& q, const ConflictModel& conf);

/// Summed value of the selection divided by the oracle optimum. The
/// selection must be feasible.
double quality(const BitVector& selection, const QuboModel& q,
               const ConflictModel& conf, const OracleSolution& oracle);

} // namespace smpp
