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

#include "smpp/qubo.hpp"

#include <algorithm>
#include <stdexcept>

namespace smpp {

QuboModel build_qubo(const ConflictModel& conf, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != conf.n)
    throw std::invalid_argument("build_qubo: values length != conflict model size");
  for (int v : values)
    if (v < 1) throw std::invalid_argument("build_qubo: values must be >= 1");

  QuboModel q;
  q.n = conf.n;
  q.linear = Vector::Zero(conf.n);
  for (int i = 0; i < conf.n; ++i) q.linear[i] = static_cast<double>(values[i]);
  q.penalty = 1.0 + static_cast<double>(*std::max_element(values.begin(), values.end()));
  for (const auto& [i, j] : conf.conflicting_pairs())
    q.quadratic[{i, j}] = -q.penalty;
  return q;
}

double objective(const QuboModel& q, const BitVector& x) {
  if (static_cast<int>(x.size()) != q.n)
    throw std::invalid_argument("objective: bitvector length != qubo size");
  double value = 0.0;
  for (int i = 0; i < q.n; ++i)
    if (x[static_cast<std::size_t>(i)]) value += q.linear[i];
  for (const auto& [pair, w] : q.quadratic)
    if (x[static_cast<std::size_t>(pair.first)] && x[static_cast<std::size_t>(pair.second)])
      value += w;
  return value;
}

IsingModel to_ising(const QuboModel& q) {
  // Substitute x_i = (1 - z_i) / 2 into -objective(x) and collect:
  //   -sum v_i (1-z_i)/2 - sum w_ij (1-z_i)(1-z_j)/4
  IsingModel ham;
  ham.n = q.n;
  ham.linear_terms = Vector::Zero(q.n);
  ham.offset = 0.0;
  for (int i = 0; i < q.n; ++i) {
    ham.linear_terms[i] += q.linear[i] / 2.0;
    ham.offset -= q.linear[i] / 2.0;
  }
  for (const auto& [pair, w] : q.quadratic) {
    const auto [i, j] = pair;
    ham.offset -= w / 4.0;
    ham.linear_terms[i] += w / 4.0;
    ham.linear_terms[j] += w / 4.0;
    ham.couplings[{i, j}] -= w / 4.0;
  }
  return ham;
}

double energy(const IsingModel& ham, const std::vector<int>& spins) {
  if (static_cast<int>(spins.size()) != ham.n)
    throw std::invalid_argument("energy: spin vector length != model size");
  double e = ham.offset;
  for (int i = 0; i < ham.n; ++i) e += ham.linear_terms[i] * spins[static_cast<std::size_t>(i)];
  for (const auto& [pair, g] : ham.couplings)
    e += g * spins[static_cast<std::size_t>(pair.first)] * spins[static_cast<std::size_t>(pair.second)];
  return e;
}

double energy_of_basis(const IsingModel& ham, std::uint64_t index) {
  double e = ham.offset;
  for (int i = 0; i < ham.n; ++i) {
    const double z = ((index >> i) & 1) ? -1.0 : 1.0;
    e += ham.linear_terms[i] * z;
  }
  for (const auto& [pair, g] : ham.couplings) {
    const bool parity = (((index >> pair.first) ^ (index >> pair.second)) & 1) != 0;
    e += parity ? -g : g;
  }
  return e;
}

Vector energy_table(const IsingModel& ham) {
  if (ham.n < 1) throw std::invalid_argument("energy_table: n must be >= 1");
  if (ham.n > 24) throw capacity_error("energy_table: supported up to n = 24");
  const std::int64_t dim = std::int64_t{1} << ham.n;

  // Flatten the coupling map once; the per-basis loop is the hot part.
  std::vector<int> ci, cj;
  std::vector<double> cg;
  for (const auto& [pair, g] : ham.couplings) {
    ci.push_back(pair.first);
    cj.push_back(pair.second);
    cg.push_back(g);
  }

  Vector table(dim);
#pragma omp parallel for schedule(static) if (dim >= (1 << 16))
  for (std::int64_t b = 0; b < dim; ++b) {
    const auto u = static_cast<std::uint64_t>(b);
    double e = ham.offset;
    for (int i = 0; i < ham.n; ++i)
      e += ((u >> i) & 1) ? -ham.linear_terms[i] : ham.linear_terms[i];
    for (std::size_t k = 0; k < cg.size(); ++k) {
      const bool parity = (((u >> ci[k]) ^ (u >> cj[k])) & 1) != 0;
      e += parity ? -cg[k] : cg[k];
    }
    table[b] = e;
  }
  return table;
}

} // namespace smpp
