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
#include <utility>
#include <vector>

#include "smpp/types.hpp"

namespace smpp {

/// Circular equatorial orbit plus the optics rotation speed. All conflicts
/// depend only on time ratios, so the defaults are a tunable LEO setup.
struct OrbitConfig {
  double earth_radius_km = 6371.0;
  double altitude_km = 550.0;
  double rotation_speed_deg_s = 0.25; // optics slew speed v_r
  double mu_km3_s2 = 398600.4418;     // gravitational parameter
};

/// Throws std::invalid_argument naming the offending field.
void validate(const OrbitConfig& orbit);

/// Period of the circular orbit at earth_radius + altitude, in seconds.
double orbital_period_s(const OrbitConfig& orbit);

struct Location {
  double lon_deg = 0.0; // [0, 360)
  double lat_deg = 0.0; // [-90, 90]
  int value = 1;        // >= 1
};

void validate(const Location& loc);

struct Instance {
  OrbitConfig orbit;
  std::vector<Location> locations;
  std::uint64_t seed = 0; // generation seed, 0 for hand-built instances

  int size() const { return static_cast<int>(locations.size()); }
};

void validate(const Instance& inst);

std::vector<int> values(const Instance& inst);

/// Pairwise timing model. All matrices are symmetric with zero diagonal and
/// conflict(i,j) == (rotation_time(i,j) > transition_time(i,j)).
struct ConflictModel {
  int n = 0;
  Matrix rotation_time;   // seconds to re-aim optics between i and j
  Matrix transition_time; // seconds of flight between capture positions
  BoolMatrix conflict;

  /// Conflicting pairs (i, j) with i < j, in lexicographic order.
  std::vector<std::pair<int, int>> conflicting_pairs() const;
};

/// Time at which the satellite passes closest to the location, measured from
/// the longitude-zero crossing: (lon / 360) * orbital period.
double capture_time_s(const Location& loc, const OrbitConfig& orbit);

/// Signed cross-track angle the optics must assume to image the location
/// while the satellite is over the equator at the location's longitude:
///   atan2(R * sin(lat), (R + h) - R * cos(lat))
/// in degrees. Zero at nadir, sign follows the latitude.
double off_nadir_angle_deg(const Location& loc, const OrbitConfig& orbit);

/// Builds rotation times |a_i - a_j| / v_r, transition times as the circular
/// gap between capture times (min of forward and wrap-around gap within one
/// period), and the conflict matrix R > T.
ConflictModel build_conflicts(const Instance& inst);

/// Random instance: longitude uniform in [0, 360), latitude uniform in
/// [-15, 15], value uniform in {1, 2}. Pure function of (n, seed, orbit).
Instance generate_instance(int n, std::uint64_t seed, const OrbitConfig& orbit = {});

/// Fixed five-location scenario with values {2, 7, 3, 2, 6} whose only
/// conflicting pairs are (0,1) and (1,2); optimal selection {1, 3, 4} with
/// value 15. Coordinates are hand-placed constants.
std::pair<Instance, ConflictModel> example_one();

} // namespace smpp
