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

#include "smpp/instance.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "smpp/rng.hpp"

namespace smpp {

void validate(const OrbitConfig& orbit) {
  if (!(orbit.earth_radius_km > 0.0))
    throw std::invalid_argument("orbit.earth_radius_km must be > 0");
  if (!(orbit.altitude_km > 0.0))
    throw std::invalid_argument("orbit.altitude_km must be > 0");
  if (!(orbit.rotation_speed_deg_s > 0.0))
    throw std::invalid_argument("orbit.rotation_speed_deg_s must be > 0");
  if (!(orbit.mu_km3_s2 > 0.0))
    throw std::invalid_argument("orbit.mu must be > 0");
}

double orbital_period_s(const OrbitConfig& orbit) {
  const double a = orbit.earth_radius_km + orbit.altitude_km;
  return 2.0 * std::numbers::pi * std::sqrt(a * a * a / orbit.mu_km3_s2);
}

void validate(const Location& loc) {
  if (!(loc.lon_deg >= 0.0 && loc.lon_deg < 360.0))
    throw std::invalid_argument("location.lon_deg must be in [0, 360)");
  if (!(loc.lat_deg >= -90.0 && loc.lat_deg <= 90.0))
    throw std::invalid_argument("location.lat_deg must be in [-90, 90]");
  if (loc.value < 1)
    throw std::invalid_argument("location.value must be >= 1");
}

void validate(const Instance& inst) {
  validate(inst.orbit);
  if (inst.locations.empty())
    throw std::invalid_argument("instance must have at least one location");
  for (const auto& loc : inst.locations) validate(loc);
}

std::vector<int> values(const Instance& inst) {
  std::vector<int> v;
  v.reserve(inst.locations.size());
  for (const auto& loc : inst.locations) v.push_back(loc.value);
  return v;
}

std::vector<std::pair<int, int>> ConflictModel::conflicting_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (conflict(i, j)) pairs.emplace_back(i, j);
  return pairs;
}

double capture_time_s(const Location& loc, const OrbitConfig& orbit) {
  return loc.lon_deg / 360.0 * orbital_period_s(orbit);
}

double off_nadir_angle_deg(const Location& loc, const OrbitConfig& orbit) {
  const double lat = loc.lat_deg * std::numbers::pi / 180.0;
  const double r = orbit.earth_radius_km;
  const double y = r * std::sin(lat);
  const double x = (r + orbit.altitude_km) - r * std::cos(lat);
  return std::atan2(y, x) * 180.0 / std::numbers::pi;
}

ConflictModel build_conflicts(const Instance& inst) {
  validate(inst);
  const int n = inst.size();
  const double period = orbital_period_s(inst.orbit);
  const double v_r = inst.orbit.rotation_speed_deg_s;

  std::vector<double> angle(n), capture(n);
  for (int i = 0; i < n; ++i) {
    angle[i] = off_nadir_angle_deg(inst.locations[i], inst.orbit);
    capture[i] = capture_time_s(inst.locations[i], inst.orbit);
  }

  ConflictModel model;
  model.n = n;
  model.rotation_time = Matrix::Zero(n, n);
  model.transition_time = Matrix::Zero(n, n);
  model.conflict = BoolMatrix::Constant(n, n, false);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double rot = std::abs(angle[i] - angle[j]) / v_r;
      const double gap = std::abs(capture[i] - capture[j]);
      const double trans = std::min(gap, period - gap);
      const bool clash = rot > trans;
      model.rotation_time(i, j) = model.rotation_time(j, i) = rot;
      model.transition_time(i, j) = model.transition_time(j, i) = trans;
      model.conflict(i, j) = model.conflict(j, i) = clash;
    }
  }
  return model;
}

Instance generate_instance(int n, std::uint64_t seed, const OrbitConfig& orbit) {
  if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
  validate(orbit);

  Rng rng(derive_seed(seed, 0x1a57));
  Instance inst;
  inst.orbit = orbit;
  inst.seed = seed;
  inst.locations.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Location loc;
    loc.lon_deg = rng.uniform(0.0, 360.0);
    loc.lat_deg = rng.uniform(-15.0, 15.0);
    loc.value = 1 + static_cast<int>(rng.integer(2));
    inst.locations.push_back(loc);
  }
  return inst;
}

std::pair<Instance, ConflictModel> example_one() {
  // Longitudes/latitudes are chosen so that, under the default orbit, the
  // only pairs with rotation time exceeding transition time are (A,B) and
  // (B,C); every other pair has a wide feasibility margin.
  Instance inst;
  inst.orbit = OrbitConfig{};
  inst.seed = 0;
  inst.locations = {
      {10.0, 10.0, 2},  // A
      {12.0, -10.0, 7}, // B
      {14.0, 10.0, 3},  // C
      {50.0, -5.0, 2},  // D
      {100.0, 5.0, 6},  // E
  };
  ConflictModel model = build_conflicts(inst);
  return {std::move(inst), std::move(model)};
}

} // namespace smpp
