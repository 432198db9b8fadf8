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

#include "smpp/types.hpp"

namespace smpp {

std::string to_string(Algorithm a) {
  switch (a) {
  case Algorithm::vqe: return "vqe";
  case Algorithm::qaoa: return "qaoa";
  case Algorithm::wqaoa: return "wqaoa";
  }
  return "unknown";
}

std::string to_string(Mode m) {
  return m == Mode::noise_free ? "noise_free" : "noise_aware";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "vqe") return Algorithm::vqe;
  if (name == "qaoa") return Algorithm::qaoa;
  if (name == "wqaoa" || name == "w-qaoa") return Algorithm::wqaoa;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::uint64_t bits_to_index(const BitVector& x) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) index |= (std::uint64_t{1} << i);
  return index;
}

BitVector index_to_bits(std::uint64_t index, int n) {
  BitVector x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (index >> i) & 1;
  return x;
}

bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  // The lowest differing bit is the first position read as x_0, x_1, ...
  const int k = __builtin_ctzll(diff);
  return ((a >> k) & 1) == 0;
}

} // namespace smpp
