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

#include <string>

#include "smpp/circuit.hpp"
#include "smpp/instance.hpp"
#include "smpp/noise.hpp"
#include "smpp/qubo.hpp"

namespace smpp {

/// Instance file schema:
///   {"seed": int,
///    "orbit": {"earth_radius_km": f, "altitude_km": f,
///              "rotation_speed_deg_s": f, "mu": f},
///    "locations": [{"lon_deg": f, "lat_deg": f, "value": int}, ...]}
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

/// File variants. Unreadable/unwritable paths raise io_error with the path;
/// malformed or out-of-range content raises std::invalid_argument naming the
/// offending field.
void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

/// Noise channel settings, all fields optional:
///   {"p1": f, "p2": f, "p_readout": f, "shots": k, "seed": n}
NoiseConfig noise_config_from_json(const std::string& text);
NoiseConfig load_noise_config(const std::string& path);

/// Debug dumps: {"linear": [...], "quadratic": [[i, j, w], ...], "offset": f}.
std::string qubo_to_json(const QuboModel& q);
std::string ising_to_json(const IsingModel& ham);

/// Gate-list dump for cross-implementation diffing:
///   {"gates": [{"kind": "ry", "q": [0], "param": 0, "coeff": 1.0, "angle": 0.0}, ...]}
std::string circuit_to_json(const Circuit& circuit);

} // namespace smpp
