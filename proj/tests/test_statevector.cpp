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

#include <cmath>
#include <complex>

#include <doctest.h>

#include "helpers.hpp"
#include "smpp/ansatz.hpp"
#include "smpp/statevector.hpp"

using namespace smpp;
using smpp::testing::dense_apply;
using smpp::testing::random_gate;
using smpp::testing::random_state;

TEST_CASE("hadamard creates an equal superposition") {
  StateVector s(1);
  apply_gate(s, {GateKind::h, 0});
  CHECK(std::abs(s.amplitudes()[0] - std::complex<double>(1 / std::sqrt(2.0), 0)) < 1e-14);
  CHECK(std::abs(s.amplitudes()[1] - std::complex<double>(1 / std::sqrt(2.0), 0)) < 1e-14);
}

TEST_CASE("rz leaves basis-state probabilities unchanged") {
  for (int basis : {0, 1, 2, 3}) {
    StateVector s(2);
    s.amplitudes()[0] = 0.0;
    s.amplitudes()[basis] = 1.0;
    Gate rz{GateKind::rz, 1, -1, 0.7321};
    apply_gate(s, rz);
    CHECK(std::norm(s.amplitudes()[basis]) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("ry(pi) flips |0> to |1>") {
  StateVector s(1);
  apply_gate(s, {GateKind::ry, 0, -1, std::numbers::pi});
  CHECK(std::norm(s.amplitudes()[1]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ry prepares the requested one-qubit distribution") {
  StateVector s(1);
  apply_gate(s, {GateKind::ry, 0, -1, 2.0 * std::asin(std::sqrt(0.3))});
  const Vector p = probabilities(s);
  CHECK(std::abs(p[0] - 0.7) < 1e-10);
  CHECK(std::abs(p[1] - 0.3) < 1e-10);
}

TEST_CASE("running an empty circuit yields the zero state") {
  Circuit empty;
  empty.n_qubits = 3;
  const StateVector s = run(empty, Vector(0));
  CHECK(std::norm(s.amplitudes()[0]) == 1.0);
}

TEST_CASE("vqe circuit with zero parameters acts as identity on |0...0>") {
  const Circuit circuit = build_vqe(4, 2);
  const StateVector s = run(circuit, Vector::Zero(circuit.n_params));
  CHECK(std::norm(s.amplitudes()[0]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qaoa with zero parameters is the uniform superposition") {
  ConflictModel conf = smpp::testing::make_conflicts(2, {{0, 1}});
  const QuboModel q = build_qubo(conf, {1, 2});
  const Circuit circuit = build_qaoa(to_ising(q), 1);
  const StateVector s = run(circuit, Vector::Zero(2));
  const Vector p = probabilities(s);
  for (int b = 0; b < 4; ++b) CHECK(p[b] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("expectation on basis states reproduces basis energies") {
  const auto& [inst, conf] = example_one();
  const QuboModel q = build_qubo(conf, values(inst));
  const IsingModel ham = to_ising(q);

  StateVector zero(5);
  CHECK(expectation(zero, ham) == doctest::Approx(0.0).epsilon(1e-12));

  StateVector bde(5);
  bde.amplitudes()[0] = 0.0;
  bde.amplitudes()[bits_to_index({0, 1, 0, 1, 1})] = 1.0;
  CHECK(expectation(bde, ham) == doctest::Approx(-15.0).epsilon(1e-12));

  // uniform superposition: mean of all basis energies
  StateVector uniform(5);
  for (int qbit = 0; qbit < 5; ++qbit) apply_gate(uniform, {GateKind::h, qbit});
  double mean = 0.0;
  for (std::uint64_t b = 0; b < 32; ++b) mean += energy_of_basis(ham, b) / 32.0;
  CHECK(expectation(uniform, ham) == doctest::Approx(mean).epsilon(1e-12));

  // table-based route agrees with the direct route
  CHECK(expectation(uniform, energy_table(ham)) ==
        doctest::Approx(expectation(uniform, ham)).epsilon(1e-14));
}

TEST_CASE("probabilities of simple states") {
  StateVector s(2);
  Vector p = probabilities(s);
  CHECK(p[0] == 1.0);
  apply_gate(s, {GateKind::h, 0});
  apply_gate(s, {GateKind::h, 1});
  p = probabilities(s);
  for (int b = 0; b < 4; ++b) CHECK(p[b] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("sampling: purity, uniformity, determinism") {
  StateVector basis(3);
  const auto pure = sample(basis, 50, 9);
  REQUIRE(pure.size() == 1);
  CHECK(pure.at(0) == 50);

  StateVector uniform(2);
  apply_gate(uniform, {GateKind::h, 0});
  apply_gate(uniform, {GateKind::h, 1});
  const auto counts = sample(uniform, 100000, 12);
  for (std::uint64_t b = 0; b < 4; ++b)
    CHECK(std::abs(counts.at(b) / 100000.0 - 0.25) < 0.01);

  CHECK(sample(uniform, 1000, 5) == sample(uniform, 1000, 5));
}

TEST_CASE("norm is preserved across long random sequences") {
  Rng rng(2024);
  StateVector s(5);
  for (int i = 0; i < 100; ++i) apply_gate(s, random_gate(5, rng));
  CHECK(std::abs(s.amplitudes().squaredNorm() - 1.0) < 1e-10);
}

TEST_CASE("rotation gates invert; h and cnot are self-inverse") {
  Rng rng(77);
  StateVector s(4);
  for (int i = 0; i < 20; ++i) apply_gate(s, random_gate(4, rng));
  const ComplexVector before = s.amplitudes();

  for (GateKind kind : {GateKind::rx, GateKind::ry, GateKind::rz}) {
    const double angle = rng.uniform(-3.0, 3.0);
    apply_gate(s, {kind, 2, -1, angle});
    apply_gate(s, {kind, 2, -1, -angle});
  }
  apply_gate(s, {GateKind::rzz, 0, 3, 1.234});
  apply_gate(s, {GateKind::rzz, 0, 3, -1.234});
  apply_gate(s, {GateKind::h, 1});
  apply_gate(s, {GateKind::h, 1});
  apply_gate(s, {GateKind::cnot, 0, 2});
  apply_gate(s, {GateKind::cnot, 0, 2});

  CHECK((s.amplitudes() - before).norm() < 1e-10);
}

TEST_CASE("diagonal gates never change probabilities") {
  Rng rng(31);
  StateVector s(4);
  for (int i = 0; i < 15; ++i) apply_gate(s, random_gate(4, rng));
  const Vector before = probabilities(s);
  apply_gate(s, {GateKind::rz, 1, -1, 0.913});
  apply_gate(s, {GateKind::rzz, 0, 3, -2.17});
  const Vector after = probabilities(s);
  CHECK((before - after).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("kernels agree with the dense Kronecker-product route") {
  Rng rng(5150);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng.integer(6));
    const Gate gate = random_gate(n, rng);

    StateVector s(n);
    s.amplitudes() = random_state(n, 1000 + static_cast<std::uint64_t>(trial));
    const ComplexVector expected = dense_apply(gate, s.amplitudes(), n);
    apply_gate(s, gate);
    CHECK((s.amplitudes() - expected).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("expectation stays inside the spectrum") {
  const Instance inst = generate_instance(6, 17);
  const ConflictModel conf = build_conflicts(inst);
  const IsingModel ham = to_ising(build_qubo(conf, values(inst)));
  const Vector table = energy_table(ham);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    StateVector s(6);
    s.amplitudes() = random_state(6, 500 + seed);
    const double e = expectation(s, ham);
    CHECK(e >= table.minCoeff() - 1e-10);
    CHECK(e <= table.maxCoeff() + 1e-10);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(25), capacity_error);

  StateVector s(2);
  CHECK_THROWS_AS(apply_gate(s, {GateKind::h, 5}), std::invalid_argument);
  CHECK_THROWS_AS(apply_gate(s, {GateKind::cnot, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_gate(s, {GateKind::ry, 0, -1, 0.0, 2, 1.0}), std::invalid_argument);

  const Circuit circuit = build_vqe(2, 1);
  CHECK_THROWS_AS(run(circuit, Vector::Zero(3)), std::invalid_argument);

  const ConflictModel conf = smpp::testing::make_conflicts(3, {});
  const IsingModel ham = to_ising(build_qubo(conf, {1, 1, 1}));
  CHECK_THROWS_AS(expectation(s, ham), std::invalid_argument);
  CHECK_THROWS_AS(sample(s, 0, 1), std::invalid_argument);
}
