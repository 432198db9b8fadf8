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

#include "smpp/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "smpp/ansatz.hpp"
#include "smpp/rng.hpp"
#include "smpp/statevector.hpp"

namespace smpp {

void validate(const OptimizerConfig& cfg) {
  if (cfg.max_iterations < 1)
    throw std::invalid_argument("optimizer: max_iterations must be >= 1");
  if (!(cfg.initial_step > 0.0))
    throw std::invalid_argument("optimizer: initial_step must be > 0");
  if (!(cfg.convergence_tol > 0.0))
    throw std::invalid_argument("optimizer: convergence_tol must be > 0");
}

OptimizationResult minimize(const CostFn& cost, int dim, const OptimizerConfig& cfg,
                            const std::optional<Vector>& x0) {
  if (dim < 1) throw std::invalid_argument("minimize: dim must be >= 1");
  validate(cfg);

  OptimizationResult result;
  result.best_cost = std::numeric_limits<double>::infinity();
  const int budget = cfg.max_iterations;

  auto evaluate = [&](const Vector& x) {
    const double f = cost(x);
    result.cost_history.push_back(f);
    if (f < result.best_cost) {
      result.best_cost = f;
      result.best_params = x;
    }
    return f;
  };
  auto spent = [&] { return static_cast<int>(result.cost_history.size()); };

  Vector start(dim);
  if (x0) {
    if (x0->size() != dim) throw std::invalid_argument("minimize: x0 size != dim");
    start = *x0;
  } else {
    Rng rng(derive_seed(cfg.seed, 0x90b5));
    for (int i = 0; i < dim; ++i)
      start[i] = rng.uniform(-std::numbers::pi, std::numbers::pi);
  }

  // Initial simplex: start plus one offset vertex per coordinate.
  std::vector<Vector> pts;
  std::vector<double> fs;
  pts.reserve(static_cast<std::size_t>(dim) + 1);
  pts.push_back(start);
  fs.push_back(evaluate(start));
  for (int i = 0; i < dim && spent() < budget; ++i) {
    Vector v = start;
    v[i] += cfg.initial_step;
    pts.push_back(v);
    fs.push_back(evaluate(v));
  }
  if (static_cast<int>(pts.size()) < dim + 1) {
    result.iterations_used = spent();
    return result; // budget exhausted while probing; best point stands
  }

  auto order = [&] {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    std::vector<Vector> p2;
    std::vector<double> f2;
    for (std::size_t i : idx) {
      p2.push_back(pts[i]);
      f2.push_back(fs[i]);
    }
    pts.swap(p2);
    fs.swap(f2);
  };

  // Trust-region steps on a simplex-based linear model, switching to
  // Nelder-Mead moves whenever the simplex degenerates or the model stalls.
  double radius = cfg.initial_step;
  const double radius_cap = 4.0 * cfg.initial_step;
  bool model_phase = true;
  int stalls = 0;

  while (spent() < budget && radius > cfg.convergence_tol) {
    order();
    const std::size_t worst = pts.size() - 1;

    if (model_phase) {
      Matrix edges(dim, dim);
      Vector df(dim);
      for (int i = 0; i < dim; ++i) {
        edges.row(i) = (pts[static_cast<std::size_t>(i) + 1] - pts[0]).transpose();
        df[i] = fs[static_cast<std::size_t>(i) + 1] - fs[0];
      }
      Eigen::ColPivHouseholderQR<Matrix> qr(edges);
      Vector gradient;
      bool model_ok = qr.rank() == dim;
      if (model_ok) {
        gradient = qr.solve(df);
        model_ok = gradient.allFinite() && gradient.norm() > 1e-12;
      }
      if (!model_ok) {
        model_phase = false;
        continue;
      }

      const Vector candidate = pts[0] - radius * gradient.normalized();
      const double fc = evaluate(candidate);
      const double predicted = radius * gradient.norm();
      const double actual = fs[0] - fc;
      if (fc < fs[worst]) {
        pts[worst] = candidate;
        fs[worst] = fc;
      }
      if (actual > 0.3 * predicted) {
        radius = std::min(radius * 1.5, radius_cap);
        stalls = 0;
      } else if (actual > 0.0) {
        stalls = 0;
      } else {
        radius *= 0.5;
        if (++stalls >= 2) {
          model_phase = false;
          stalls = 0;
        }
      }
      continue;
    }

    // One Nelder-Mead iteration with dimension-adaptive coefficients
    // (expansion 1 + 2/dim, contraction 0.75 - 1/(2 dim), shrink 1 - 1/dim).
    const double chi = 1.0 + 2.0 / dim;
    const double gamma = 0.75 - 0.5 / dim;
    const double sigma = 1.0 - 1.0 / dim;

    Vector centroid = Vector::Zero(dim);
    for (std::size_t i = 0; i < worst; ++i) centroid += pts[i];
    centroid /= static_cast<double>(dim);

    const Vector reflected = centroid + (centroid - pts[worst]);
    const double fr = evaluate(reflected);
    if (fr < fs[0]) {
      if (spent() < budget) {
        const Vector expanded = centroid + chi * (centroid - pts[worst]);
        const double fe = evaluate(expanded);
        if (fe < fr) {
          pts[worst] = expanded;
          fs[worst] = fe;
        } else {
          pts[worst] = reflected;
          fs[worst] = fr;
        }
      } else {
        pts[worst] = reflected;
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[worst - 1]) {
      pts[worst] = reflected;
      fs[worst] = fr;
      continue;
    }
    if (spent() >= budget) break;
    const bool outside = fr < fs[worst];
    const Vector contracted = outside ? centroid + gamma * (reflected - centroid)
                                      : centroid + gamma * (pts[worst] - centroid);
    const double fk = evaluate(contracted);
    if (fk < std::min(fr, fs[worst])) {
      pts[worst] = contracted;
      fs[worst] = fk;
      continue;
    }
    // Shrink toward the best vertex; also tighten the trust region so the
    // radius keeps tracking the simplex scale.
    for (std::size_t i = 1; i < pts.size() && spent() < budget; ++i) {
      pts[i] = pts[0] + sigma * (pts[i] - pts[0]);
      fs[i] = evaluate(pts[i]);
    }
    radius *= 0.5;
  }

  result.iterations_used = spent();
  return result;
}

RunRecord solve(Algorithm algorithm, const IsingModel& ham, const QuboModel& q,
                const ConflictModel& conf, int repetitions,
                const OptimizerConfig& cfg, double epsilon) {
  if (ham.n != q.n || q.n != conf.n)
    throw std::invalid_argument("solve: inconsistent model sizes");
  validate(cfg);
  const auto start_time = std::chrono::steady_clock::now();

  Circuit circuit;
  switch (algorithm) {
  case Algorithm::vqe:
    circuit = build_vqe(ham.n, repetitions);
    break;
  case Algorithm::qaoa:
    circuit = build_qaoa(ham, repetitions);
    break;
  case Algorithm::wqaoa: {
    const WarmStart ws = solve_relaxation(q, epsilon, cfg.seed);
    circuit = build_wqaoa(ham, ws, repetitions);
    break;
  }
  }

  const Vector energies = energy_table(ham);
  const CostFn cost = [&](const Vector& params) {
    return expectation(run(circuit, params), energies);
  };

  Rng rng(derive_seed(cfg.seed, 0x417a));
  Vector init(circuit.n_params);
  for (int i = 0; i < circuit.n_params; ++i)
    init[i] = rng.uniform(-std::numbers::pi, std::numbers::pi);

  const OptimizationResult opt = minimize(cost, circuit.n_params, cfg, init);

  const StateVector final_state = run(circuit, opt.best_params);
  const BitVector selection = decode_and_repair(probabilities(final_state), q, conf);

  RunRecord record;
  record.algorithm = algorithm;
  record.n = ham.n;
  record.seed = cfg.seed;
  record.selection = selection;
  record.objective_value = objective(q, selection);
  record.iterations = opt.iterations_used;
  record.mode = Mode::noise_free;
  record.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return record;
}

} // namespace smpp
