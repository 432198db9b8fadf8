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

#include "smpp/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace smpp {

namespace {

using nlohmann::json;

double number_field(const json& obj, const std::string& field, const std::string& where) {
  if (!obj.contains(field))
    throw std::invalid_argument(where + ": missing field '" + field + "'");
  const json& v = obj.at(field);
  if (!v.is_number())
    throw std::invalid_argument(where + "." + field + ": expected a number");
  return v.get<double>();
}

} // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["seed"] = inst.seed;
  j["orbit"] = {
      {"earth_radius_km", inst.orbit.earth_radius_km},
      {"altitude_km", inst.orbit.altitude_km},
      {"rotation_speed_deg_s", inst.orbit.rotation_speed_deg_s},
      {"mu", inst.orbit.mu_km3_s2},
  };
  j["locations"] = json::array();
  for (const auto& loc : inst.locations)
    j["locations"].push_back(
        {{"lon_deg", loc.lon_deg}, {"lat_deg", loc.lat_deg}, {"value", loc.value}});
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("instance: invalid JSON: ") + e.what());
  }

  Instance inst;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer())
      throw std::invalid_argument("instance.seed: expected an integer");
    inst.seed = j["seed"].get<std::uint64_t>();
  }
  if (!j.contains("orbit")) throw std::invalid_argument("instance: missing field 'orbit'");
  const json& orbit = j["orbit"];
  inst.orbit.earth_radius_km = number_field(orbit, "earth_radius_km", "orbit");
  inst.orbit.altitude_km = number_field(orbit, "altitude_km", "orbit");
  inst.orbit.rotation_speed_deg_s = number_field(orbit, "rotation_speed_deg_s", "orbit");
  inst.orbit.mu_km3_s2 = number_field(orbit, "mu", "orbit");
  try {
    validate(inst.orbit);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("instance: ") + e.what());
  }

  if (!j.contains("locations") || !j["locations"].is_array() || j["locations"].empty())
    throw std::invalid_argument("instance.locations: expected a non-empty array");
  int index = 0;
  for (const json& item : j["locations"]) {
    const std::string where = "locations[" + std::to_string(index) + "]";
    Location loc;
    loc.lon_deg = number_field(item, "lon_deg", where);
    loc.lat_deg = number_field(item, "lat_deg", where);
    if (!item.contains("value") || !item["value"].is_number_integer())
      throw std::invalid_argument(where + ".value: expected an integer");
    loc.value = item["value"].get<int>();
    try {
      validate(loc);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
    inst.locations.push_back(loc);
    ++index;
  }
  return inst;
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << instance_to_json(inst);
  if (!out) throw io_error("write failed: " + path);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

NoiseConfig noise_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("noise config: invalid JSON: ") + e.what());
  }
  NoiseConfig cfg;
  if (j.contains("p1")) cfg.p1 = number_field(j, "p1", "noise config");
  if (j.contains("p2")) cfg.p2 = number_field(j, "p2", "noise config");
  if (j.contains("p_readout"))
    cfg.p_readout = number_field(j, "p_readout", "noise config");
  if (j.contains("shots")) {
    if (!j["shots"].is_number_integer())
      throw std::invalid_argument("noise config.shots: expected an integer");
    cfg.shots = j["shots"].get<int>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer())
      throw std::invalid_argument("noise config.seed: expected an integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("noise config: ") + e.what());
  }
  return cfg;
}

NoiseConfig load_noise_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return noise_config_from_json(buffer.str());
}

std::string qubo_to_json(const QuboModel& q) {
  json j;
  j["linear"] = std::vector<double>(q.linear.begin(), q.linear.end());
  j["quadratic"] = json::array();
  for (const auto& [pair, w] : q.quadratic)
    j["quadratic"].push_back({pair.first, pair.second, w});
  j["offset"] = 0.0;
  j["penalty"] = q.penalty;
  return j.dump() + "\n";
}

std::string ising_to_json(const IsingModel& ham) {
  json j;
  j["linear"] = std::vector<double>(ham.linear_terms.begin(), ham.linear_terms.end());
  j["quadratic"] = json::array();
  for (const auto& [pair, g] : ham.couplings)
    j["quadratic"].push_back({pair.first, pair.second, g});
  j["offset"] = ham.offset;
  return j.dump() + "\n";
}

std::string circuit_to_json(const Circuit& circuit) {
  json j;
  j["n_qubits"] = circuit.n_qubits;
  j["n_params"] = circuit.n_params;
  j["gates"] = json::array();
  for (const Gate& gate : circuit.gates) {
    json g;
    g["kind"] = to_string(gate.kind);
    g["q"] = is_two_qubit(gate.kind) ? json::array({gate.q0, gate.q1})
                                     : json::array({gate.q0});
    if (gate.param >= 0) {
      g["param"] = gate.param;
      g["coeff"] = gate.coeff;
    }
    if (has_angle(gate.kind)) g["angle"] = gate.angle;
    j["gates"].push_back(g);
  }
  return j.dump() + "\n";
}

} // namespace smpp
