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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smpp/bench.hpp"
#include "smpp/io.hpp"
#include "smpp/noise.hpp"
#include "smpp/optimizer.hpp"
#include "smpp/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidArgs = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

std::vector<int> selected_indices(const smpp::BitVector& x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out.push_back(static_cast<int>(i));
  return out;
}

struct SolveOptions {
  std::string instance_path;
  std::string algo = "qaoa";
  int reps = 3;
  std::uint64_t seed = 1;
  int iters = 100;
  double epsilon = 0.25;
  bool noisy = false;
  smpp::NoiseConfig noise;
};

int run_solve(const SolveOptions& opt) {
  const smpp::Instance inst = smpp::load_instance(opt.instance_path);
  const smpp::ConflictModel conf = smpp::build_conflicts(inst);
  const smpp::QuboModel q = smpp::build_qubo(conf, smpp::values(inst));
  const smpp::IsingModel ham = smpp::to_ising(q);
  const smpp::OracleSolution oracle = smpp::brute_force(q, conf);

  smpp::OptimizerConfig cfg;
  cfg.max_iterations = opt.iters;
  cfg.seed = opt.seed;

  smpp::RunRecord record;
  if (opt.noisy) {
    smpp::NoiseConfig noise = opt.noise;
    noise.seed = smpp::derive_seed(opt.seed, 0xd0e);
    record = smpp::solve_noisy(smpp::parse_algorithm(opt.algo), ham, q, conf,
                               opt.reps, cfg, noise, opt.epsilon);
  } else {
    record = smpp::solve(smpp::parse_algorithm(opt.algo), ham, q, conf, opt.reps,
                         cfg, opt.epsilon);
  }
  record.quality = smpp::quality(record.selection, q, conf, oracle);
  record.optimal_value = oracle.best_value;

  nlohmann::json j;
  j["algorithm"] = smpp::to_string(record.algorithm);
  j["mode"] = smpp::to_string(record.mode);
  j["n"] = record.n;
  j["seed"] = record.seed;
  j["selection"] = selected_indices(record.selection);
  j["objective"] = record.objective_value;
  j["optimal"] = record.optimal_value;
  j["quality"] = record.quality;
  j["wall_time_s"] = record.wall_time_s;
  j["iterations"] = record.iterations;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_oracle(const std::string& instance_path) {
  const smpp::Instance inst = smpp::load_instance(instance_path);
  const smpp::ConflictModel conf = smpp::build_conflicts(inst);
  const smpp::QuboModel q = smpp::build_qubo(conf, smpp::values(inst));
  const smpp::OracleSolution oracle = smpp::brute_force(q, conf);

  nlohmann::json j;
  j["n"] = conf.n;
  j["selection"] = selected_indices(oracle.best_x);
  j["optimal"] = oracle.best_value;
  j["evaluations"] = oracle.evaluations;
  j["conflicting_pairs"] = conf.conflicting_pairs();
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Satellite mission planning with variational quantum algorithms"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance file");
  int gen_n = 10;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  smpp::OrbitConfig gen_orbit;
  gen->add_option("--n", gen_n, "Number of locations")->required();
  gen->add_option("--seed", gen_seed, "Generation seed");
  gen->add_option("--out", gen_out, "Output file")->required();
  gen->add_option("--vr", gen_orbit.rotation_speed_deg_s, "Optics rotation speed [deg/s]");
  gen->add_option("--altitude", gen_orbit.altitude_km, "Orbit altitude [km]");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  SolveOptions solve_opt;
  solve_cmd->add_option("--instance", solve_opt.instance_path, "Instance JSON file")->required();
  solve_cmd->add_option("--algo", solve_opt.algo, "vqe, qaoa or wqaoa");
  solve_cmd->add_option("--reps", solve_opt.reps, "Circuit repetitions r");
  solve_cmd->add_option("--seed", solve_opt.seed, "Optimizer seed");
  solve_cmd->add_option("--iters", solve_opt.iters, "Cost evaluation budget");
  solve_cmd->add_option("--epsilon", solve_opt.epsilon, "Warm-start clamp");
  solve_cmd->add_flag("--noisy", solve_opt.noisy, "Noise-aware shot-based solve");
  std::string solve_noise_file;
  solve_cmd->add_option("--noise-config", solve_noise_file, "Noise settings JSON file");
  solve_cmd->add_option("--p1", solve_opt.noise.p1, "1-qubit gate error probability");
  solve_cmd->add_option("--p2", solve_opt.noise.p2, "2-qubit gate error probability");
  solve_cmd->add_option("--p-readout", solve_opt.noise.p_readout, "Readout flip probability");
  solve_cmd->add_option("--shots", solve_opt.noise.shots, "Shots per evaluation");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum of an instance file");
  std::string oracle_path;
  oracle_cmd->add_option("--instance", oracle_path, "Instance JSON file")->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark sweep");
  smpp::BenchmarkPlan plan;
  std::string mode_name = "noise-free";
  std::string algos = "vqe,qaoa,wqaoa";
  bench_cmd->add_option("--mode", mode_name, "noise-free or noise-aware");
  bench_cmd->add_option("--n-min", plan.n_min, "Smallest location count");
  bench_cmd->add_option("--n-max", plan.n_max, "Largest location count");
  bench_cmd->add_option("--algos", algos, "Comma-separated algorithm list");
  bench_cmd->add_option("--repeats", plan.repeats, "Runs per instance and algorithm");
  bench_cmd->add_option("--reps", plan.repetitions_r, "Circuit repetitions r");
  bench_cmd->add_option("--seed", plan.base_seed, "Base seed");
  bench_cmd->add_option("--out", plan.output_dir, "Output directory")->required();
  bench_cmd->add_option("--instances-per-n", plan.instances_per_n, "Instances per size");
  bench_cmd->add_option("--evals", plan.max_evaluations, "Cost evaluation budget");
  bench_cmd->add_option("--epsilon", plan.epsilon, "Warm-start clamp");
  bench_cmd->add_option("--vr", plan.orbit.rotation_speed_deg_s, "Optics rotation speed [deg/s]");
  bench_cmd->add_option("--altitude", plan.orbit.altitude_km, "Orbit altitude [km]");
  std::string bench_noise_file;
  bench_cmd->add_option("--noise-config", bench_noise_file, "Noise settings JSON file");
  bench_cmd->add_option("--p1", plan.noise.p1, "1-qubit gate error probability");
  bench_cmd->add_option("--p2", plan.noise.p2, "2-qubit gate error probability");
  bench_cmd->add_option("--p-readout", plan.noise.p_readout, "Readout flip probability");
  bench_cmd->add_option("--shots", plan.noise.shots, "Shots per evaluation");
  bool no_timing = false;
  bench_cmd->add_flag("--no-timing", no_timing,
                      "Zero wall times for byte-reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalidArgs;
  }

  // a --noise-config file supplies the base settings; explicit flags win
  const auto overlay_noise = [](CLI::App* cmd, const std::string& file,
                                smpp::NoiseConfig& target) {
    if (file.empty()) return;
    smpp::NoiseConfig base = smpp::load_noise_config(file);
    if (cmd->count("--p1")) base.p1 = target.p1;
    if (cmd->count("--p2")) base.p2 = target.p2;
    if (cmd->count("--p-readout")) base.p_readout = target.p_readout;
    if (cmd->count("--shots")) base.shots = target.shots;
    target = base;
  };

  try {
    if (gen->parsed()) {
      const smpp::Instance inst = smpp::generate_instance(gen_n, gen_seed, gen_orbit);
      smpp::save_instance(inst, gen_out);
      std::cout << "wrote " << gen_out << " (" << gen_n << " locations)\n";
      return kExitOk;
    }
    if (solve_cmd->parsed()) {
      overlay_noise(solve_cmd, solve_noise_file, solve_opt.noise);
      return run_solve(solve_opt);
    }
    if (oracle_cmd->parsed()) return run_oracle(oracle_path);
    if (bench_cmd->parsed()) {
      if (mode_name == "noise-free") {
        plan.mode = smpp::Mode::noise_free;
      } else if (mode_name == "noise-aware") {
        plan.mode = smpp::Mode::noise_aware;
      } else {
        throw std::invalid_argument("--mode must be noise-free or noise-aware");
      }
      plan.algorithms.clear();
      std::size_t pos = 0;
      while (pos <= algos.size()) {
        const std::size_t comma = algos.find(',', pos);
        const std::string name = algos.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!name.empty()) plan.algorithms.push_back(smpp::parse_algorithm(name));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      plan.measure_time = !no_timing;
      overlay_noise(bench_cmd, bench_noise_file, plan.noise);

      const smpp::BenchmarkReport report = smpp::run_benchmark(plan);
      const std::string prefix = plan.output_dir.empty() ? "" : plan.output_dir + "/";
      smpp::write_csv(report, prefix + "records.csv");
      smpp::write_plots(report, plan.output_dir);
      std::cout << "wrote " << report.records.size() << " records to " << prefix
                << "records.csv\n";
      return kExitOk;
    }
  } catch (const smpp::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const smpp::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitInvalidArgs;
}
