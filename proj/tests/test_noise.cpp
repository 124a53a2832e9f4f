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

#include <cmath>
#include <map>
#include <string>

#include "ctx/noise.hpp"
#include "ctx/rng.hpp"

using ctx::Circuit;
using ctx::GateKind;
using ctx::MechanismToggles;
using ctx::NoiseParams;
using ctx::PauliString;

TEST_CASE("noise params validation") {
  NoiseParams p;
  CHECK(p.valid());
  p.e_p_sq = 5e-4;
  p.e_p_2q = 3e-3;
  p.set_symmetric_readout(7e-3);
  p.t1 = 73.0;
  CHECK(p.valid());
  CHECK(p.e0 == doctest::Approx(7e-3));
  CHECK(p.e1 == doctest::Approx(7e-3));
  p.e_p_sq = -0.1;
  CHECK_FALSE(p.valid());
  p.e_p_sq = 0.0;
  p.e1 = 1.5;
  CHECK_FALSE(p.valid());
}

TEST_CASE("single-qubit error sampling") {
  ctx::Rng rng = ctx::make_rng(41, 0);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(ctx::sample_sq_error(3, 1, 0.0, rng).has_value());
  }
  std::map<char, int> histogram;
  for (int i = 0; i < 9000; ++i) {
    auto err = ctx::sample_sq_error(3, 1, 1.0, rng);
    REQUIRE(err.has_value());
    CHECK(err->weight() == 1);
    CHECK(err->pauli_at(0) == 'I');
    CHECK(err->pauli_at(2) == 'I');
    ++histogram[err->pauli_at(1)];
  }
  // Uniform over X/Y/Z: each cell ~3000, 5 sigma ~ 225.
  for (char c : {'X', 'Y', 'Z'}) {
    CHECK(std::fabs(histogram[c] - 3000.0) < 250.0);
  }
}

TEST_CASE("two-qubit error sampling") {
  ctx::Rng rng = ctx::make_rng(42, 0);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(ctx::sample_2q_error(4, 0, 2, 0.0, rng).has_value());
  }
  std::map<std::string, int> histogram;
  for (int i = 0; i < 30000; ++i) {
    auto err = ctx::sample_2q_error(4, 0, 2, 1.0, rng);
    REQUIRE(err.has_value());
    CHECK_FALSE(err->is_identity_bits());
    CHECK(err->pauli_at(1) == 'I');
    CHECK(err->pauli_at(3) == 'I');
    ++histogram[std::string(1, err->pauli_at(0)) + err->pauli_at(2)];
  }
  // All 15 non-identity pairs occur, roughly uniformly (2000 each).
  CHECK(histogram.size() == 15);
  for (const auto& [key, count] : histogram) {
    CHECK(std::fabs(count - 2000.0) < 300.0);
  }
}

TEST_CASE("readout flips") {
  ctx::Rng rng = ctx::make_rng(43, 0);
  CHECK(ctx::flip_readout(0, 1.0, 0.0, rng) == 1);
  CHECK(ctx::flip_readout(1, 0.0, 1.0, rng) == 0);
  CHECK(ctx::flip_readout(0, 0.0, 1.0, rng) == 0);
  CHECK(ctx::flip_readout(1, 1.0, 0.0, rng) == 1);

  int flips = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) flips += ctx::flip_readout(0, 0.1, 0.0, rng);
  double sigma = std::sqrt(0.1 * 0.9 * trials);
  CHECK(std::fabs(flips - 0.1 * trials) < 5.0 * sigma);
}

TEST_CASE("noiseless run matches the plain simulator") {
  Circuit c(3);
  c.append(GateKind::H, 0);
  c.append(GateKind::CNOT, 0, 1);
  c.append(GateKind::CNOT, 1, 2);
  c.measure(0, "a");
  c.measure(1, "b");
  c.measure(2, "c");
  ctx::Rng rng = ctx::make_rng(44, 0);
  NoiseParams quiet;
  for (int shot = 0; shot < 50; ++shot) {
    ctx::MeasurementRecord rec =
        ctx::run_noisy(c, quiet, MechanismToggles::all(), rng);
    CHECK(rec[c.record_index("a")] == rec[c.record_index("b")]);
    CHECK(rec[c.record_index("b")] == rec[c.record_index("c")]);
  }
}

TEST_CASE("readout-only noise flips at the configured rate") {
  Circuit c(1);
  c.measure(0, "m");
  NoiseParams p;
  p.e0 = 0.05;
  ctx::Rng rng = ctx::make_rng(45, 0);
  int ones = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    ones += ctx::run_noisy(c, p, MechanismToggles::only_readout(), rng)[0];
  }
  double sigma = std::sqrt(0.05 * 0.95 * trials);
  CHECK(std::fabs(ones - 0.05 * trials) < 5.0 * sigma);
}

TEST_CASE("toggles suppress mechanisms") {
  Circuit c(1);
  c.append(GateKind::H, 0);
  c.append(GateKind::H, 0);  // identity overall
  c.measure(0, "m");
  NoiseParams p;
  p.e_p_sq = 1.0;  // every gate would be followed by an error
  p.e0 = 0.0;
  ctx::Rng rng = ctx::make_rng(46, 0);
  for (int i = 0; i < 20; ++i) {
    CHECK(ctx::run_noisy(c, p, MechanismToggles::only_readout(), rng)[0] == 0);
  }
  // With the mechanism on, errors must land between the gates sometimes.
  int flipped = 0;
  for (int i = 0; i < 200; ++i) {
    flipped += ctx::run_noisy(c, p, MechanismToggles::only_sq(), rng)[0];
  }
  CHECK(flipped > 0);
}

TEST_CASE("error events are reported in op order") {
  Circuit c(2);
  c.append(GateKind::H, 0);
  c.append(GateKind::CZ, 0, 1);
  c.measure(0, "m0");
  c.measure(1, "m1");
  NoiseParams p;
  p.e_p_sq = 1.0;
  p.e_p_2q = 1.0;
  ctx::Rng rng = ctx::make_rng(47, 0);
  std::vector<ctx::ErrorEvent> events;
  ctx::run_noisy(c, p, MechanismToggles::all(), rng, &events);
  REQUIRE(events.size() == 2);
  CHECK(events[0].op_index == 0);
  CHECK(events[0].error.weight() == 1);
  CHECK(events[1].op_index == 1);
  CHECK(events[1].error.weight() >= 1);
  CHECK(events[0].moment <= events[1].moment);
}
