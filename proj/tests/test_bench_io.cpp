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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "smpp/ansatz.hpp"
#include "smpp/bench.hpp"
#include "smpp/io.hpp"

using namespace smpp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

BenchmarkPlan tiny_plan() {
  BenchmarkPlan plan;
  plan.n_min = 3;
  plan.n_max = 4;
  plan.algorithms = {Algorithm::qaoa};
  plan.repeats = 2;
  plan.max_evaluations = 30;
  plan.measure_time = false;
  return plan;
}

} // namespace

TEST_CASE("record counting follows the plan") {
  BenchmarkPlan one;
  one.n_min = one.n_max = 3;
  one.algorithms = {Algorithm::qaoa};
  one.repeats = 1;
  one.max_evaluations = 20;
  CHECK(run_benchmark(one).records.size() == 1);

  BenchmarkPlan plan;
  plan.n_min = 3;
  plan.n_max = 8;
  plan.repeats = 3;
  plan.max_evaluations = 25;
  const BenchmarkReport report = run_benchmark(plan);
  CHECK(report.records.size() == 54); // 6 sizes x 3 algorithms x 3 repeats
  CHECK(report.oracle_solves == 6);
  for (const RunRecord& r : report.records) {
    CHECK(r.quality >= 0.0);
    CHECK(r.quality <= 1.0 + 1e-12);
  }
}

TEST_CASE("mode capacity limits") {
  BenchmarkPlan plan;
  plan.n_max = 21;
  validate(plan); // noise-free up to 21 is fine
  plan.n_max = 22;
  CHECK_THROWS_AS(validate(plan), capacity_error);
  plan.mode = Mode::noise_aware;
  plan.n_max = 15;
  CHECK_THROWS_AS(validate(plan), capacity_error);
  plan.n_max = 14;
  validate(plan);
}

TEST_CASE("csv files: headers, rows, aggregates") {
  const BenchmarkReport empty;
  write_csv(empty, "empty_records.csv");
  CHECK(slurp("empty_records.csv") ==
        "mode,algorithm,n,seed,quality,objective,optimal,wall_time_s,iterations\n");
  CHECK(slurp("empty_records_agg.csv") ==
        "mode,algorithm,n,mean_quality,mean_wall_time_s\n");

  const BenchmarkReport report = run_benchmark(tiny_plan());
  write_csv(report, "tiny_records.csv");
  const std::string text = slurp("tiny_records.csv");
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + 4); // header + 2 sizes x 2 repeats
}

TEST_CASE("identical plans give byte-identical csv output") {
  const BenchmarkReport a = run_benchmark(tiny_plan());
  const BenchmarkReport b = run_benchmark(tiny_plan());
  write_csv(a, "det_a.csv");
  write_csv(b, "det_b.csv");
  CHECK(slurp("det_a.csv") == slurp("det_b.csv"));
  CHECK(slurp("det_a_agg.csv") == slurp("det_b_agg.csv"));
  write_plots(a, ".");
  const std::string svg_a = slurp("noise_free_quality.svg");
  write_plots(b, ".");
  CHECK(slurp("noise_free_quality.svg") == svg_a);
}

TEST_CASE("aggregate csv is reproducible from the records csv") {
  const BenchmarkReport report = run_benchmark(tiny_plan());
  write_csv(report, "agg_records.csv");

  std::istringstream in(slurp("agg_records.csv"));
  std::string line;
  std::getline(in, line); // header
  struct Sums {
    double quality = 0, time = 0;
    int count = 0;
  };
  std::map<std::string, Sums> groups;
  while (std::getline(in, line)) {
    const auto fields = split(line, ',');
    REQUIRE(fields.size() == 9);
    Sums& s = groups[fields[0] + ',' + fields[1] + ',' + fields[2]];
    s.quality += std::stod(fields[4]);
    s.time += std::stod(fields[7]);
    ++s.count;
  }

  std::istringstream agg_in(slurp("agg_records_agg.csv"));
  std::getline(agg_in, line); // header
  int rows = 0;
  while (std::getline(agg_in, line)) {
    const auto fields = split(line, ',');
    REQUIRE(fields.size() == 5);
    const Sums& s = groups.at(fields[0] + ',' + fields[1] + ',' + fields[2]);
    CHECK(std::abs(std::stod(fields[3]) - s.quality / s.count) < 1e-12);
    CHECK(std::abs(std::stod(fields[4]) - s.time / s.count) < 1e-12);
    ++rows;
  }
  CHECK(rows == static_cast<int>(groups.size()));
}

TEST_CASE("plots: log axis spacing and well-formed svg") {
  CHECK(axis_fraction(1.0, 1.0, 100.0, true) == doctest::Approx(0.0));
  CHECK(axis_fraction(10.0, 1.0, 100.0, true) == doctest::Approx(0.5));
  CHECK(axis_fraction(100.0, 1.0, 100.0, true) == doctest::Approx(1.0));

  BenchmarkReport single;
  RunRecord r;
  r.algorithm = Algorithm::qaoa;
  r.n = 3;
  r.quality = 1.0;
  r.optimal_value = 4.0;
  r.objective_value = 4.0;
  r.wall_time_s = 0.25;
  single.records.push_back(r);
  BenchmarkAggregate agg;
  agg.algorithm = Algorithm::qaoa;
  agg.n = 3;
  agg.mean_quality = 1.0;
  agg.mean_wall_time_s = 0.25;
  single.aggregates.push_back(agg);

  write_plots(single, ".");
  const std::string svg = slurp("noise_free_time.svg");
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

  const BenchmarkReport empty;
  CHECK_THROWS_AS(write_plots(empty, "."), std::invalid_argument);
}

TEST_CASE("instance json roundtrip") {
  const Instance inst = generate_instance(7, 123);
  save_instance(inst, "roundtrip.json");
  const Instance back = load_instance("roundtrip.json");
  CHECK(back.seed == inst.seed);
  CHECK(back.orbit.altitude_km == inst.orbit.altitude_km);
  REQUIRE(back.size() == inst.size());
  for (int i = 0; i < inst.size(); ++i) {
    CHECK(back.locations[i].lon_deg == inst.locations[i].lon_deg);
    CHECK(back.locations[i].lat_deg == inst.locations[i].lat_deg);
    CHECK(back.locations[i].value == inst.locations[i].value);
  }
}

TEST_CASE("instance loader reports the offending field") {
  const std::string bad_lat = R"({
    "seed": 1,
    "orbit": {"earth_radius_km": 6371, "altitude_km": 550,
              "rotation_speed_deg_s": 0.25, "mu": 398600.4418},
    "locations": [{"lon_deg": 10.0, "lat_deg": 95.0, "value": 1}]
  })";
  CHECK_THROWS_WITH_AS(instance_from_json(bad_lat).size(),
                       doctest::Contains("lat_deg"), std::invalid_argument);

  const std::string no_orbit = R"({"seed": 1, "locations": []})";
  CHECK_THROWS_AS(instance_from_json(no_orbit), std::invalid_argument);

  const std::string bad_value = R"({
    "seed": 1,
    "orbit": {"earth_radius_km": 6371, "altitude_km": 550,
              "rotation_speed_deg_s": 0.25, "mu": 398600.4418},
    "locations": [{"lon_deg": 10.0, "lat_deg": 5.0, "value": 1.5}]
  })";
  CHECK_THROWS_WITH_AS(instance_from_json(bad_value).size(),
                       doctest::Contains("value"), std::invalid_argument);

  CHECK_THROWS_AS(load_instance("does_not_exist.json"), io_error);
}

TEST_CASE("noise config json") {
  const NoiseConfig cfg = noise_config_from_json(
      R"({"p1": 0.002, "p2": 0.02, "p_readout": 0.05, "shots": 512, "seed": 9})");
  CHECK(cfg.p1 == 0.002);
  CHECK(cfg.p2 == 0.02);
  CHECK(cfg.p_readout == 0.05);
  CHECK(cfg.shots == 512);
  CHECK(cfg.seed == 9);

  const NoiseConfig defaults = noise_config_from_json("{}");
  CHECK(defaults.p1 == 0.001);
  CHECK(defaults.shots == 1024);

  CHECK_THROWS_WITH_AS(noise_config_from_json(R"({"p1": 1.5})").shots,
                       doctest::Contains("p1"), std::invalid_argument);
  CHECK_THROWS_AS(load_noise_config("missing_noise.json"), io_error);
}

TEST_CASE("debug dumps are valid json with the expected shape") {
  const auto& [inst, conf] = example_one();
  const QuboModel q = build_qubo(conf, values(inst));
  const IsingModel ham = to_ising(q);

  const auto qj = nlohmann::json::parse(qubo_to_json(q));
  CHECK(qj["linear"].size() == 5);
  CHECK(qj["quadratic"].size() == 2);
  CHECK(qj["quadratic"][0][2] == -8.0);

  const auto hj = nlohmann::json::parse(ising_to_json(ham));
  CHECK(hj["linear"].size() == 5);
  CHECK(hj.contains("offset"));

  const Circuit circuit = build_qaoa(ham, 1);
  const auto cj = nlohmann::json::parse(circuit_to_json(circuit));
  CHECK(cj["gates"].size() == circuit.gates.size());
  CHECK(cj["gates"][0]["kind"] == "h");
}
