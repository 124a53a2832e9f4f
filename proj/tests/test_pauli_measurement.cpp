// Copyright 2026 The contextuality-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "ctx/circuit.hpp"
#include "ctx/pauli.hpp"
#include "ctx/pauli_measurement.hpp"
#include "ctx/rng.hpp"
#include "ctx/tableau.hpp"

using ctx::Circuit;
using ctx::GateKind;
using ctx::PauliReadout;
using ctx::PauliString;
using ctx::StabilizerTableau;

namespace {

struct PrepOp {
  GateKind g;
  size_t q0;
  size_t q1;
};

/// Random 2-qubit Clifford word.
std::vector<PrepOp> random_prep(ctx::Rng& rng) {
  const GateKind gates[] = {GateKind::H,  GateKind::S,  GateKind::S_DAG,
                            GateKind::SQRT_X, GateKind::X, GateKind::CZ,
                            GateKind::CNOT};
  std::vector<PrepOp> ops;
  size_t len = 4 + rng() % 8;
  for (size_t i = 0; i < len; ++i) {
    GateKind g = gates[rng() % 7];
    size_t q0 = rng() % 2;
    ops.push_back({g, q0, is_two_qubit(g) ? 1 - q0 : SIZE_MAX});
  }
  return ops;
}

}  // namespace

TEST_CASE("single readout reproduces definite eigenvalues") {
  ctx::Rng rng = ctx::make_rng(51, 0);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PrepOp> prep = random_prep(rng);
    StabilizerTableau ref(2);
    for (const PrepOp& op : prep) ref.apply(op.g, op.q0, op.q1);

    PauliString p(2);
    p.set_x(0, ctx::random_bit(rng));
    p.set_z(0, ctx::random_bit(rng));
    p.set_x(1, ctx::random_bit(rng));
    p.set_z(1, ctx::random_bit(rng));
    if (p.is_identity_bits()) continue;
    p.set_sign(ctx::random_bit(rng) ? -1 : +1);

    int expected = ref.pauli_expectation(p);
    if (expected == 0) continue;

    Circuit c(2);
    for (const PrepOp& op : prep) {
      if (op.q1 == SIZE_MAX) {
        c.append(op.g, op.q0);
      } else {
        c.append(op.g, op.q0, op.q1);
      }
    }
    PauliReadout slot = ctx::append_single_pauli_readout(c, p);
    c.measure(slot.qubit, "m");

    StabilizerTableau t(2);
    ctx::MeasurementRecord rec = ctx::run_circuit(t, c, rng);
    int eigen = slot.sign * (rec[0] ? -1 : 1);
    CHECK(eigen == expected);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("single readout rejects bad inputs") {
  Circuit c(2);
  CHECK_THROWS(ctx::append_single_pauli_readout(c, PauliString(2)));
  CHECK_THROWS(
      ctx::append_single_pauli_readout(c, PauliString::from_str("iX I")));
}

TEST_CASE("pair readout measures both observables faithfully") {
  ctx::Rng rng = ctx::make_rng(52, 0);
  // Bell pair: XX, ZZ definite (+1), -YY definite (+1).
  struct Case {
    const char* p1;
    const char* p2;
    int e1;
    int e2;
  };
  const Case cases[] = {
      {"XX", "ZZ", 1, 1},  {"ZZ", "XX", 1, 1},   {"-YY", "XX", 1, 1},
      {"XX", "-YY", 1, 1}, {"ZZ", "-YY", 1, 1},  {"ZI", "IZ", 0, 0},
      {"XI", "IX", 0, 0},  {"-XZ", "-ZX", 0, 0},
  };
  for (const Case& tc : cases) {
    for (int shot = 0; shot < 40; ++shot) {
      Circuit c(2);
      c.append(GateKind::H, 0);
      c.append(GateKind::CNOT, 0, 1);
      PauliString p1 = PauliString::from_str(tc.p1);
      PauliString p2 = PauliString::from_str(tc.p2);
      auto slots = ctx::append_pair_readout(c, p1, p2);
      c.measure(slots[0].qubit, "m1");
      c.measure(slots[1].qubit, "m2");

      StabilizerTableau t(2);
      ctx::MeasurementRecord rec = ctx::run_circuit(t, c, rng);
      int v1 = slots[0].sign * (rec[c.record_index("m1")] ? -1 : 1);
      int v2 = slots[1].sign * (rec[c.record_index("m2")] ? -1 : 1);
      if (tc.e1 != 0) CHECK(v1 == tc.e1);
      if (tc.e2 != 0) CHECK(v2 == tc.e2);
      // Joint consistency: the product observable is definite on the Bell
      // state for every case above.
      PauliString prod = p1;
      prod.mul(p2);
      StabilizerTableau bell(2);
      bell.apply(GateKind::H, 0);
      bell.apply(GateKind::CNOT, 0, 1);
      int ep = bell.pauli_expectation(prod);
      if (ep != 0) CHECK(v1 * v2 == ep);
    }
  }
}

TEST_CASE("pair readout rejects invalid pairs") {
  Circuit c(2);
  // Anticommuting pair.
  CHECK_THROWS(ctx::append_pair_readout(c, PauliString::from_str("XI"),
                                        PauliString::from_str("ZI")));
  // Dependent pair (same operator).
  CHECK_THROWS(ctx::append_pair_readout(c, PauliString::from_str("XX"),
                                        PauliString::from_str("XX")));
  // Identity.
  CHECK_THROWS(ctx::append_pair_readout(c, PauliString(2),
                                        PauliString::from_str("XX")));
}

TEST_CASE("qnd measurement repeats and preserves definite co-observables") {
  ctx::Rng rng = ctx::make_rng(53, 0);
  for (const char* obs : {"XX", "ZZ", "-YY", "XI", "IZ", "YI"}) {
    for (int shot = 0; shot < 30; ++shot) {
      Circuit c(3);  // qubits 0,1 data + 2 ancilla
      c.append(GateKind::H, 0);
      c.append(GateKind::CNOT, 0, 1);
      PauliString p(3);
      PauliString p2 = PauliString::from_str(obs);
      for (size_t q = 0; q < 2; ++q) {
        p.set_x(q, p2.x_bit(q));
        p.set_z(q, p2.z_bit(q));
      }
      p.set_sign(p2.sign_int());

      int s1 = ctx::append_qnd_measurement(c, p, 2, "r1");
      int s2 = ctx::append_qnd_measurement(c, p, 2, "r2");

      StabilizerTableau t(3);
      ctx::MeasurementRecord rec = ctx::run_circuit(t, c, rng);
      int v1 = s1 * (rec[c.record_index("r1")] ? -1 : 1);
      int v2 = s2 * (rec[c.record_index("r2")] ? -1 : 1);
      CHECK(v1 == v2);
      // Post-measurement, the observable has the measured value.
      CHECK(t.pauli_expectation(p) == v1);
    }
  }
}

TEST_CASE("qnd projects without disturbing commuting stabilizers") {
  ctx::Rng rng = ctx::make_rng(54, 0);
  for (int shot = 0; shot < 30; ++shot) {
    Circuit c(3);
    c.append(GateKind::H, 0);
    c.append(GateKind::CNOT, 0, 1);
    PauliString xx(3);
    xx.set_x(0, true);
    xx.set_x(1, true);
    ctx::append_qnd_measurement(c, xx, 2, "r");
    StabilizerTableau t(3);
    ctx::run_circuit(t, c, rng);
    // ZZ commutes with XX and was +1 before; it must still be +1.
    PauliString zz(3);
    zz.set_z(0, true);
    zz.set_z(1, true);
    CHECK(t.pauli_expectation(zz) == 1);
    CHECK(t.pauli_expectation(xx) == 1);
  }
}
