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
#include <string>
#include <vector>

#include "smpp/instance.hpp"
#include "smpp/noise.hpp"
#include "smpp/optimizer.hpp"
#include "smpp/types.hpp"

namespace smpp {

/// One benchmark sweep: for every n in [n_min, n_max], generate
/// instances_per_n instances, solve each `repeats` times per algorithm with
/// distinct optimizer seeds, and compare every run against the exact oracle
/// (computed once per instance). Everything is a pure function of this plan,
/// except wall-clock times; set measure_time = false to zero those out and
/// make outputs byte-reproducible.
struct BenchmarkPlan {
  int n_min = 3;
  int n_max = 8;
  std::vector<Algorithm> algorithms = {Algorithm::vqe, Algorithm::qaoa,
                                       Algorithm::wqaoa};
  int repeats = 3;
  int repetitions_r = 3;
  Mode mode = Mode::noise_free;
  std::uint64_t base_seed = 1;
  std::string output_dir;
  int instances_per_n = 1;
  OrbitConfig orbit;
  double epsilon = 0.25;
  int max_evaluations = 100;
  NoiseConfig noise; // used in noise_aware mode (noise.seed derived per run)
  bool measure_time = true;
};

/// Throws invalid_argument for malformed plans and capacity_error when the
/// range exceeds the mode's ceiling (21 noise-free, 14 noise-aware).
void validate(const BenchmarkPlan& plan);

struct BenchmarkAggregate {
  Mode mode = Mode::noise_free;
  Algorithm algorithm = Algorithm::qaoa;
  int n = 0;
  double mean_quality = 0.0;
  double mean_wall_time_s = 0.0;
};

struct BenchmarkReport {
  std::vector<RunRecord> records; // sorted by (mode, algorithm, n, seed)
  std::vector<BenchmarkAggregate> aggregates;
  std::uint64_t oracle_solves = 0; // exactly one per instance
};

BenchmarkReport run_benchmark(const BenchmarkPlan& plan);

/// Writes one row per record to `path` and the per-(mode, algorithm, n)
/// aggregates next to it (suffix `_agg` before the extension). Numeric
/// fields use round-trip-exact formatting, so identical reports produce
/// byte-identical files.
void write_csv(const BenchmarkReport& report, const std::string& path);

/// Two self-contained SVGs per mode present in the report: wall time vs n on
/// a logarithmic y axis and quality vs n on a linear one, one polyline per
/// algorithm. Throws invalid_argument for an empty report.
void write_plots(const BenchmarkReport& report, const std::string& dir);

/// Fraction of the axis (0 at lo, 1 at hi) where a value lands; log scale
/// clamps values below lo. Exposed for plot tests.
double axis_fraction(double value, double lo, double hi, bool log_scale);

} // namespace smpp
