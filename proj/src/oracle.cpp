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

#include "smpp/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace smpp {

namespace {

// Repair in place until conflict-free.
void repair(BitVector& x, const QuboModel& q, const ConflictModel& conf) {
  const int n = conf.n;
  while (true) {
    int worst_i = -1, worst_j = -1;
    double worst_excess = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!x[static_cast<std::size_t>(i)]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!x[static_cast<std::size_t>(j)] || !conf.conflict(i, j)) continue;
        const double excess = conf.rotation_time(i, j) - conf.transition_time(i, j);
        if (worst_i < 0 || excess > worst_excess) {
          worst_i = i;
          worst_j = j;
          worst_excess = excess;
        }
      }
    }
    if (worst_i < 0) return; // feasible

    // Drop the endpoint worth less; on equal values drop the higher index,
    // which is always j here.
    const double vi = q.linear[worst_i];
    const double vj = q.linear[worst_j];
    const int drop = vi < vj ? worst_i : worst_j;
    x[static_cast<std::size_t>(drop)] = 0;
  }
}

} // namespace

OracleSolution brute_force(const QuboModel& q, const ConflictModel& conf) {
  if (q.n != conf.n)
    throw std::invalid_argument("brute_force: qubo size != conflict model size");
  if (conf.n > 26) throw capacity_error("brute_force: supported up to n = 26");
  const int n = conf.n;

  std::vector<std::uint64_t> conflict_mask(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && conf.conflict(i, j))
        conflict_mask[static_cast<std::size_t>(i)] |= (std::uint64_t{1} << j);

  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t best_mask = 0;
  double best_value = 0.0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    bool feasible = true;
    double value = 0.0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int i = __builtin_ctzll(rest);
      if (mask & conflict_mask[static_cast<std::size_t>(i)]) {
        feasible = false;
        break;
      }
      value += q.linear[i];
    }
    if (!feasible) continue;
    if (value > best_value ||
        (value == best_value && lex_less(mask, best_mask)))
    {
      best_value = value;
      best_mask = mask;
    }
  }

  OracleSolution sol;
  sol.best_x = index_to_bits(best_mask, n);
  sol.best_value = best_value;
  sol.evaluations = count;
  return sol;
}

bool is_feasible(const BitVector& x, const ConflictModel& conf) {
  if (static_cast<int>(x.size()) != conf.n)
    throw std::invalid_argument("is_feasible: bitvector length != model size");
  for (int i = 0; i < conf.n; ++i) {
    if (!x[static_cast<std::size_t>(i)]) continue;
    for (int j = i + 1; j < conf.n; ++j)
      if (x[static_cast<std::size_t>(j)] && conf.conflict(i, j)) return false;
  }
  return true;
}

BitVector decode_and_repair(const Vector& probs, const QuboModel& q,
                            const ConflictModel& conf) {
  if (probs.size() == 0) throw std::invalid_argument("decode_and_repair: empty distribution");
  std::uint64_t best = 0;
  for (std::int64_t b = 1; b < probs.size(); ++b) {
    const auto u = static_cast<std::uint64_t>(b);
    if (probs[b] > probs[static_cast<std::int64_t>(best)] ||
        (probs[b] == probs[static_cast<std::int64_t>(best)] && lex_less(u, best)))
      best = u;
  }
  BitVector x = index_to_bits(best, conf.n);
  repair(x, q, conf);
  return x;
}

BitVector decode_and_repair(const std::map<std::uint64_t, int>& counts,
                            const QuboModel& q, const ConflictModel& conf) {
  if (counts.empty()) throw std::invalid_argument("decode_and_repair: empty histogram");
  std::uint64_t best = counts.begin()->first;
  int best_count = counts.begin()->second;
  for (const auto& [index, count] : counts) {
    if (count > best_count || (count == best_count && lex_less(index, best))) {
      best = index;
      best_count = count;
    }
  }
  BitVector x = index_to_bits(best, conf.n);
  repair(x, q, conf);
  return x;
}

double quality(const BitVector& selection, const QuboModel& q,
               const ConflictModel& conf, const OracleSolution& oracle) {
  if (!is_feasible(selection, conf))
    throw std::invalid_argument("quality: selection is infeasible");
  double value = 0.0;
  for (int i = 0; i < q.n; ++i)
    if (selection[static_cast<std::size_t>(i)]) value += q.linear[i];
  return value / oracle.best_value;
}

} // namespace smpp
