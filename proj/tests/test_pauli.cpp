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

#include "ctx/pauli.hpp"
#include "ctx/rng.hpp"

using ctx::GateKind;
using ctx::PauliString;

TEST_CASE("parse and print round trip") {
  for (const char* s : {"+XIZ", "-YY", "+iZ", "-iXY", "+III", "+Y"}) {
    PauliString p = PauliString::from_str(s);
    CHECK(p.str() == s);
  }
  CHECK(PauliString::from_str("XX").str() == "+XX");
  CHECK_THROWS(PauliString::from_str("XQ"));
  CHECK_THROWS(PauliString::from_str(""));
  CHECK_THROWS(PauliString::from_str("-"));
}

TEST_CASE("single-site constructor") {
  PauliString p = PauliString::single(3, 1, 'Y', -1);
  CHECK(p.str() == "-IYI");
  CHECK(p.weight() == 1);
  CHECK(p.pauli_at(1) == 'Y');
  CHECK(p.sign_int() == -1);
}

TEST_CASE("sign bookkeeping") {
  PauliString y = PauliString::from_str("Y");
  CHECK(y.sign_int() == 1);
  // Y = i X Z internally.
  CHECK(y.xz_phase_exponent() == 1);
  y.negate();
  CHECK(y.sign_int() == -1);
  PauliString iz = PauliString::from_str("iZ");
  CHECK_THROWS(iz.sign_int());
}

TEST_CASE("single-qubit group law") {
  auto prod = [](const char* a, const char* b) {
    PauliString p = PauliString::from_str(a);
    p.mul(PauliString::from_str(b));
    return p.str();
  };
  CHECK(prod("X", "Z") == "-iY");
  CHECK(prod("Z", "X") == "+iY");
  CHECK(prod("X", "Y") == "+iZ");
  CHECK(prod("Y", "X") == "-iZ");
  CHECK(prod("Y", "Y") == "+I");
  CHECK(prod("-X", "X") == "-I");
  CHECK(prod("XX", "ZZ") == "-YY");
  CHECK(prod("XZ", "ZX") == "+YY");
}

TEST_CASE("commutation") {
  auto comm = [](const char* a, const char* b) {
    return PauliString::from_str(a).commutes_with(PauliString::from_str(b));
  };
  CHECK_FALSE(comm("X", "Z"));
  CHECK(comm("X", "X"));
  CHECK(comm("XX", "ZZ"));
  CHECK(comm("XX", "YY"));
  CHECK_FALSE(comm("XI", "ZZ"));
  CHECK(comm("IZ", "ZI"));
}

TEST_CASE("gate conjugation table") {
  auto conj = [](const char* s, GateKind g, size_t q0,
                 size_t q1 = SIZE_MAX) {
    PauliString p = PauliString::from_str(s);
    p.conjugate_by(g, q0, q1);
    return p.str();
  };
  CHECK(conj("X", GateKind::H, 0) == "+Z");
  CHECK(conj("Z", GateKind::H, 0) == "+X");
  CHECK(conj("Y", GateKind::H, 0) == "-Y");
  CHECK(conj("X", GateKind::S, 0) == "+Y");
  CHECK(conj("Y", GateKind::S, 0) == "-X");
  CHECK(conj("Z", GateKind::S, 0) == "+Z");
  CHECK(conj("X", GateKind::S_DAG, 0) == "-Y");
  CHECK(conj("Z", GateKind::SQRT_X, 0) == "-Y");
  CHECK(conj("Y", GateKind::SQRT_X, 0) == "+Z");
  CHECK(conj("X", GateKind::SQRT_X, 0) == "+X");
  CHECK(conj("Z", GateKind::X, 0) == "-Z");
  CHECK(conj("X", GateKind::Z, 0) == "-X");
  CHECK(conj("X", GateKind::Y, 0) == "-X");
  CHECK(conj("Z", GateKind::Y, 0) == "-Z");
  CHECK(conj("XI", GateKind::CNOT, 0, 1) == "+XX");
  CHECK(conj("IZ", GateKind::CNOT, 0, 1) == "+ZZ");
  CHECK(conj("ZI", GateKind::CNOT, 0, 1) == "+ZI");
  CHECK(conj("XI", GateKind::CZ, 0, 1) == "+XZ");
  CHECK(conj("IX", GateKind::CZ, 0, 1) == "+ZX");
  CHECK(conj("ZZ", GateKind::CZ, 0, 1) == "+ZZ");
}

TEST_CASE("conjugation is a group automorphism") {
  ctx::Rng rng = ctx::make_rng(12, 0);
  const size_t n = 5;
  const GateKind gates[] = {GateKind::H,      GateKind::S, GateKind::S_DAG,
                            GateKind::SQRT_X, GateKind::X, GateKind::Y,
                            GateKind::Z,      GateKind::CZ, GateKind::CNOT};
  for (int trial = 0; trial < 200; ++trial) {
    PauliString a(n), b(n);
    for (size_t q = 0; q < n; ++q) {
      a.set_x(q, ctx::random_bit(rng));
      a.set_z(q, ctx::random_bit(rng));
      b.set_x(q, ctx::random_bit(rng));
      b.set_z(q, ctx::random_bit(rng));
    }
    GateKind g = gates[rng() % 9];
    size_t q0 = rng() % n;
    size_t q1 = is_two_qubit(g) ? (q0 + 1 + rng() % (n - 1)) % n : SIZE_MAX;

    bool commuted = a.commutes_with(b);
    PauliString ab = a;
    ab.mul(b);
    ab.conjugate_by(g, q0, q1);

    PauliString ac = a, bc = b;
    ac.conjugate_by(g, q0, q1);
    bc.conjugate_by(g, q0, q1);
    CHECK(ac.commutes_with(bc) == commuted);
    ac.mul(bc);
    CHECK(ac == ab);
  }
}

TEST_CASE("conjugating twice by an involution restores") {
  ctx::Rng rng = ctx::make_rng(13, 0);
  for (int trial = 0; trial < 100; ++trial) {
    PauliString p(4);
    for (size_t q = 0; q < 4; ++q) {
      p.set_x(q, ctx::random_bit(rng));
      p.set_z(q, ctx::random_bit(rng));
    }
    for (GateKind g : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z}) {
      PauliString r = p;
      r.conjugate_by(g, 2);
      r.conjugate_by(g, 2);
      CHECK(r == p);
    }
    PauliString r = p;
    r.conjugate_by(GateKind::CZ, 1, 3);
    r.conjugate_by(GateKind::CZ, 1, 3);
    CHECK(r == p);
    r.conjugate_by(GateKind::S, 0);
    r.conjugate_by(GateKind::S_DAG, 0);
    CHECK(r == p);
  }
}

TEST_CASE("weight and identity") {
  PauliString p = PauliString::from_str("XIYZI");
  CHECK(p.weight() == 3);
  CHECK_FALSE(p.is_identity_bits());
  PauliString id(5);
  CHECK(id.is_identity_bits());
  PauliString m = PauliString::from_str("-IIIII");
  CHECK(m.is_identity_bits());
}
