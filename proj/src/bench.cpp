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

#include "smpp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

#include "smpp/rng.hpp"

namespace smpp {

namespace {

std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string fmt2(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  return buffer;
}

int mode_cap(Mode mode) { return mode == Mode::noise_free ? 21 : 14; }

} // namespace

void validate(const BenchmarkPlan& plan) {
  if (plan.n_min < 1 || plan.n_max < plan.n_min)
    throw std::invalid_argument("benchmark: need 1 <= n_min <= n_max");
  if (plan.algorithms.empty())
    throw std::invalid_argument("benchmark: no algorithms selected");
  if (plan.repeats < 1) throw std::invalid_argument("benchmark: repeats must be >= 1");
  if (plan.repetitions_r < 1)
    throw std::invalid_argument("benchmark: repetitions must be >= 1");
  if (plan.instances_per_n < 1)
    throw std::invalid_argument("benchmark: instances_per_n must be >= 1");
  if (plan.max_evaluations < 1)
    throw std::invalid_argument("benchmark: max_evaluations must be >= 1");
  if (plan.n_max > mode_cap(plan.mode))
    throw capacity_error("benchmark: " + to_string(plan.mode) +
                         " mode supports up to n = " + std::to_string(mode_cap(plan.mode)));
  validate(plan.orbit);
  validate(plan.noise);
}

BenchmarkReport run_benchmark(const BenchmarkPlan& plan) {
  validate(plan);
  BenchmarkReport report;

  for (int n = plan.n_min; n <= plan.n_max; ++n) {
    for (int k = 0; k < plan.instances_per_n; ++k) {
      const std::uint64_t inst_seed =
          derive_seed(derive_seed(plan.base_seed, static_cast<std::uint64_t>(n)),
                      0x100 + static_cast<std::uint64_t>(k));
      const Instance inst = generate_instance(n, inst_seed, plan.orbit);
      const ConflictModel conf = build_conflicts(inst);
      const QuboModel q = build_qubo(conf, values(inst));
      const IsingModel ham = to_ising(q);
      const OracleSolution oracle_solution = brute_force(q, conf);
      ++report.oracle_solves;

      for (std::size_t a = 0; a < plan.algorithms.size(); ++a) {
        for (int rep = 0; rep < plan.repeats; ++rep) {
          OptimizerConfig cfg;
          cfg.max_iterations = plan.max_evaluations;
          cfg.seed = derive_seed(derive_seed(inst_seed, a),
                                 static_cast<std::uint64_t>(rep));

          RunRecord record;
          if (plan.mode == Mode::noise_free) {
            record = solve(plan.algorithms[a], ham, q, conf, plan.repetitions_r,
                           cfg, plan.epsilon);
          } else {
            NoiseConfig noise = plan.noise;
            noise.seed = derive_seed(cfg.seed, 0xd0e);
            record = solve_noisy(plan.algorithms[a], ham, q, conf,
                                 plan.repetitions_r, cfg, noise, plan.epsilon);
          }
          record.quality = quality(record.selection, q, conf, oracle_solution);
          record.optimal_value = oracle_solution.best_value;
          if (!plan.measure_time) record.wall_time_s = 0.0;
          report.records.push_back(std::move(record));
        }
      }
    }
  }

  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const RunRecord& a, const RunRecord& b) {
                     return std::tuple(a.mode, a.algorithm, a.n, a.seed) <
                            std::tuple(b.mode, b.algorithm, b.n, b.seed);
                   });

  // Aggregates accumulate in record order, so recomputing the means from the
  // records CSV reproduces them bit for bit.
  struct Sums {
    double quality = 0.0;
    double time = 0.0;
    int count = 0;
  };
  std::map<std::tuple<Mode, Algorithm, int>, Sums> groups;
  for (const RunRecord& r : report.records) {
    Sums& s = groups[{r.mode, r.algorithm, r.n}];
    s.quality += r.quality;
    s.time += r.wall_time_s;
    ++s.count;
  }
  for (const auto& [key, s] : groups) {
    BenchmarkAggregate agg;
    agg.mode = std::get<0>(key);
    agg.algorithm = std::get<1>(key);
    agg.n = std::get<2>(key);
    agg.mean_quality = s.quality / s.count;
    agg.mean_wall_time_s = s.time / s.count;
    report.aggregates.push_back(agg);
  }
  return report;
}

void write_csv(const BenchmarkReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << "mode,algorithm,n,seed,quality,objective,optimal,wall_time_s,iterations\n";
  for (const RunRecord& r : report.records)
    out << to_string(r.mode) << ',' << to_string(r.algorithm) << ',' << r.n << ','
        << r.seed << ',' << fmt(r.quality) << ',' << fmt(r.objective_value) << ','
        << fmt(r.optimal_value) << ',' << fmt(r.wall_time_s) << ',' << r.iterations
        << '\n';
  if (!out) throw io_error("write failed: " + path);

  const auto dot = path.rfind('.');
  const std::string agg_path = dot == std::string::npos
                                   ? path + "_agg"
                                   : path.substr(0, dot) + "_agg" + path.substr(dot);
  std::ofstream agg(agg_path);
  if (!agg) throw io_error("cannot open for writing: " + agg_path);
  agg << "mode,algorithm,n,mean_quality,mean_wall_time_s\n";
  for (const BenchmarkAggregate& a : report.aggregates)
    agg << to_string(a.mode) << ',' << to_string(a.algorithm) << ',' << a.n << ','
        << fmt(a.mean_quality) << ',' << fmt(a.mean_wall_time_s) << '\n';
  if (!agg) throw io_error("write failed: " + agg_path);
}

double axis_fraction(double value, double lo, double hi, bool log_scale) {
  if (log_scale) {
    const double clamped = std::max(value, lo);
    return (std::log10(clamped) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
  }
  return (value - lo) / (hi - lo);
}

namespace {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points; // (n, value)
};

const char* algorithm_color(Algorithm a) {
  switch (a) {
  case Algorithm::vqe: return "#1f77b4";
  case Algorithm::qaoa: return "#ff7f0e";
  case Algorithm::wqaoa: return "#2ca02c";
  }
  return "#000000";
}

void write_chart(const std::string& path, const std::string& title,
                 const std::string& y_label, const std::vector<Series>& series,
                 bool log_y, double y_lo, double y_hi) {
  constexpr double width = 640, height = 440;
  constexpr double left = 64, right = 608, top = 48, bottom = 392;

  double x_lo = 1e300, x_hi = -1e300;
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
    }
  if (x_hi <= x_lo) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }

  auto px = [&](double x) { return left + (right - left) * (x - x_lo) / (x_hi - x_lo); };
  auto py = [&](double y) {
    return bottom - (bottom - top) * axis_fraction(y, y_lo, y_hi, log_y);
  };

  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" << title << "</text>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << bottom << "\" stroke=\"black\"/>\n";

  // x ticks on integers
  const int x_first = static_cast<int>(std::ceil(x_lo));
  const int x_last = static_cast<int>(std::floor(x_hi));
  const int x_step = std::max(1, (x_last - x_first) / 10);
  for (int x = x_first; x <= x_last; x += x_step) {
    out << "<line x1=\"" << fmt2(px(x)) << "\" y1=\"" << bottom << "\" x2=\""
        << fmt2(px(x)) << "\" y2=\"" << bottom + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt2(px(x)) << "\" y=\"" << bottom + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << x
        << "</text>\n";
  }
  out << "<text x=\"336\" y=\"" << bottom + 40
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
         "locations n</text>\n";

  // y ticks: decades on log scale, 6 even ticks otherwise
  if (log_y) {
    const int d_lo = static_cast<int>(std::ceil(std::log10(y_lo) - 1e-9));
    const int d_hi = static_cast<int>(std::floor(std::log10(y_hi) + 1e-9));
    for (int d = d_lo; d <= d_hi; ++d) {
      const double y = std::pow(10.0, d);
      out << "<line x1=\"" << left - 5 << "\" y1=\"" << fmt2(py(y)) << "\" x2=\"" << left
          << "\" y2=\"" << fmt2(py(y)) << "\" stroke=\"black\"/>\n";
      out << "<text x=\"" << left - 8 << "\" y=\"" << fmt2(py(y) + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
          << "</text>\n";
    }
  } else {
    for (int k = 0; k <= 5; ++k) {
      const double y = y_lo + (y_hi - y_lo) * k / 5.0;
      out << "<line x1=\"" << left - 5 << "\" y1=\"" << fmt2(py(y)) << "\" x2=\"" << left
          << "\" y2=\"" << fmt2(py(y)) << "\" stroke=\"black\"/>\n";
      out << "<text x=\"" << left - 8 << "\" y=\"" << fmt2(py(y) + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
          << fmt2(y) << "</text>\n";
    }
  }
  out << "<text x=\"16\" y=\"220\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 16 220)\">" << y_label << "</text>\n";

  double legend_y = top + 8;
  for (const Series& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i) out << ' ';
      out << fmt2(px(s.points[i].first)) << ',' << fmt2(py(s.points[i].second));
    }
    out << "\"/>\n";
    for (const auto& [x, y] : s.points)
      out << "<circle cx=\"" << fmt2(px(x)) << "\" cy=\"" << fmt2(py(y))
          << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
    out << "<line x1=\"" << right - 108 << "\" y1=\"" << fmt2(legend_y) << "\" x2=\""
        << right - 84 << "\" y2=\"" << fmt2(legend_y) << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << right - 78 << "\" y=\"" << fmt2(legend_y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
    legend_y += 18;
  }
  out << "</svg>\n";
  if (!out) throw io_error("write failed: " + path);
}

} // namespace

void write_plots(const BenchmarkReport& report, const std::string& dir) {
  if (report.records.empty())
    throw std::invalid_argument("write_plots: empty report");

  std::vector<Mode> modes;
  for (const auto& agg : report.aggregates)
    if (std::find(modes.begin(), modes.end(), agg.mode) == modes.end())
      modes.push_back(agg.mode);

  for (Mode mode : modes) {
    std::vector<Series> time_series, quality_series;
    double t_lo = 1e300, t_hi = -1e300;
    for (Algorithm alg : {Algorithm::vqe, Algorithm::qaoa, Algorithm::wqaoa}) {
      Series ts{to_string(alg), algorithm_color(alg), {}};
      Series qs = ts;
      for (const auto& agg : report.aggregates) {
        if (agg.mode != mode || agg.algorithm != alg) continue;
        ts.points.emplace_back(agg.n, agg.mean_wall_time_s);
        qs.points.emplace_back(agg.n, agg.mean_quality);
        if (agg.mean_wall_time_s > 0.0) {
          t_lo = std::min(t_lo, agg.mean_wall_time_s);
          t_hi = std::max(t_hi, agg.mean_wall_time_s);
        }
      }
      if (!ts.points.empty()) {
        time_series.push_back(std::move(ts));
        quality_series.push_back(std::move(qs));
      }
    }
    if (t_hi < t_lo) {
      // all-zero times (reproducibility mode); keep a fixed decade window
      t_lo = 1e-3;
      t_hi = 1.0;
    }
    const double y_lo = std::pow(10.0, std::floor(std::log10(t_lo)));
    const double y_hi = std::pow(10.0, std::ceil(std::log10(t_hi * 1.0000001)));

    const std::string prefix = dir.empty() ? "" : dir + "/";
    write_chart(prefix + to_string(mode) + "_time.svg",
                "Mean solve time (" + to_string(mode) + ")", "wall time [s]",
                time_series, true, y_lo, y_hi == y_lo ? y_lo * 10.0 : y_hi);
    write_chart(prefix + to_string(mode) + "_quality.svg",
                "Mean result quality (" + to_string(mode) + ")", "quality",
                quality_series, false, 0.0, 1.05);
  }
}

} // namespace smpp
