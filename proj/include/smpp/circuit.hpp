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
#include <vector>

#include "smpp/types.hpp"

namespace smpp {

/// Gate matrices use the half-angle exponential convention:
///   RX(a) = exp(-i a X / 2), RY(a) = exp(-i a Y / 2),
///   RZ(a) = exp(-i a Z / 2), RZZ(a) = exp(-i a (Z o Z) / 2).
/// H and CNOT carry no angle.
enum class GateKind { h, rx, ry, rz, rzz, cnot };

std::string to_string(GateKind kind);

/// One gate template. For cnot, q0 is the control and q1 the target; for rzz
/// the two targets are (q0, q1); single-qubit gates use q0 only (q1 = -1).
///
/// The bound rotation angle is `angle + coeff * params[param]`, or just
/// `angle` when param < 0. This covers every layer in use: plain parameters
/// (coeff 1), cost-layer angles scaled by problem coefficients, and constant
/// warm-start rotations.
struct Gate {
  GateKind kind = GateKind::h;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;
  int param = -1;
  double coeff = 1.0;

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int n_qubits = 0;
  int n_params = 0;
  std::vector<Gate> gates;
};

inline bool is_two_qubit(GateKind kind) {
  return kind == GateKind::rzz || kind == GateKind::cnot;
}

inline bool has_angle(GateKind kind) {
  return kind != GateKind::h && kind != GateKind::cnot;
}

double bound_angle(const Gate& gate, const Vector& params);

} // namespace smpp
