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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "ctx/ghz_budget.hpp"
#include "ctx/ghz_game.hpp"
#include "ctx/grid.hpp"
#include "ctx/rng.hpp"
#include "ctx/tableau.hpp"

using ctx::GateKind;
using ctx::GhzGrowth;
using ctx::GridGraph;
using ctx::MechanismToggles;
using ctx::NoiseParams;
using ctx::PauliString;

TEST_CASE("grid geometry") {
  GridGraph g(3, 4);
  CHECK(g.num_active() == 12);
  CHECK(g.is_connected());
  CHECK(g.neighbors(g.node(1, 1)).size() == 4);
  CHECK(g.neighbors(g.node(0, 0)).size() == 2);

  GridGraph trunc(3, 4, 7);
  CHECK(trunc.num_active() == 7);
  CHECK(trunc.is_connected());
  CHECK_FALSE(trunc.is_active(2, 3));

  for (size_t n : {2ul, 5ul, 9ul, 12ul, 25ul, 105ul}) {
    GridGraph s = GridGraph::square_for(n);
    CHECK(s.num_active() == n);
    CHECK(s.is_connected());
  }
}

TEST_CASE("growth prepares the ghz state") {
  ctx::Rng rng = ctx::make_rng(71, 0);
  for (size_t n : {2ul, 3ul, 9ul, 16ul, 25ul}) {
    for (int pattern = 0; pattern < 4; ++pattern) {
      GhzGrowth growth = ctx::ghz_growth(n, rng);
      CHECK(growth.circuit.num_qubits() == n);
      ctx::StabilizerTableau t(n);
      ctx::run_circuit(t, growth.circuit, rng);
      for (size_t k = 0; k + 1 < n; ++k) {
        PauliString zz(n);
        zz.set_z(k, true);
        zz.set_z(k + 1, true);
        CHECK(t.pauli_expectation(zz) == 1);
      }
      PauliString all_x(n);
      for (size_t q = 0; q < n; ++q) all_x.set_x(q, true);
      CHECK(t.pauli_expectation(all_x) == 1);
    }
  }
}

TEST_CASE("growth respects grid adjacency") {
  ctx::Rng rng = ctx::make_rng(72, 0);
  GridGraph g = GridGraph::square_for(12);
  GhzGrowth growth = ctx::bfs_growth_circuit(g, g.center_node(), rng);
  for (const ctx::Operation& op : growth.circuit.ops()) {
    if (!is_two_qubit(op.gate)) continue;
    auto [r0, c0] = g.coord(op.q0);
    auto [r1, c1] = g.coord(op.q1);
    size_t dist = (r0 > r1 ? r0 - r1 : r1 - r0) + (c0 > c1 ? c0 - c1 : c1 - c0);
    CHECK(dist == 1);
  }
}

TEST_CASE("attach moments and idle times") {
  ctx::Rng rng = ctx::make_rng(73, 0);
  GhzGrowth growth = ctx::ghz_growth(9, rng);
  REQUIRE(growth.attach_moment.size() == 9);
  int last = growth.circuit.num_moments() - 1;
  for (int m : growth.attach_moment) {
    CHECK(m >= 0);
    CHECK(m <= last);
  }
  std::vector<double> idle = ctx::idle_times(growth, 42.0);
  for (double t : idle) {
    CHECK(t >= 0.0);
    CHECK(std::fmod(t, 42.0) == doctest::Approx(0.0));
  }
  // Later attachments idle less: the root (first entangler) waits at
  // least as long as the last-attached qubit.
  double max_idle = *std::max_element(idle.begin(), idle.end());
  CHECK(idle[growth.root] == doctest::Approx(max_idle));
}

TEST_CASE("question sampler covers the even-weight space") {
  ctx::Rng rng = ctx::make_rng(74, 0);
  std::set<std::vector<uint8_t>> seen;
  for (int i = 0; i < 400; ++i) {
    std::vector<uint8_t> x = ctx::sample_questions(4, rng);
    int weight = std::accumulate(x.begin(), x.end(), 0);
    CHECK(weight % 2 == 0);
    seen.insert(x);
  }
  CHECK(seen.size() == 8);  // all even-weight 4-bit vectors
}

TEST_CASE("win rule") {
  ctx::MeasurementRecord y(3);
  // sum x = 2 -> need odd parity of answers.
  y[0] = 1;
  CHECK(ctx::ghz_win({1, 1, 0}, y));
  y[0] = 0;
  CHECK_FALSE(ctx::ghz_win({1, 1, 0}, y));
  // sum x = 0 -> need even parity.
  CHECK(ctx::ghz_win({0, 0, 0}, y));
}

TEST_CASE("noiseless quantum strategy always wins") {
  NoiseParams quiet;
  for (size_t n : {2ul, 3ul, 8ul, 16ul, 25ul}) {
    ctx::Rng rng = ctx::make_rng(75, n);
    GhzGrowth growth = ctx::ghz_growth(n, rng);
    for (int game = 0; game < 8; ++game) {
      std::vector<uint8_t> x = ctx::sample_questions(n, rng);
      for (int shot = 0; shot < 25; ++shot) {
        CHECK(ctx::play_ghz_game(growth, x, quiet, MechanismToggles::all(),
                                 rng));
      }
    }
  }
}

TEST_CASE("odd-weight questions are rejected") {
  ctx::Rng rng = ctx::make_rng(76, 0);
  GhzGrowth growth = ctx::ghz_growth(3, rng);
  CHECK_THROWS(ctx::build_ghz_game_circuit(growth, {1, 0, 0}));
}

TEST_CASE("classical bound formula") {
  CHECK(ctx::classical_bound_formula(2) == doctest::Approx(1.0));
  CHECK(ctx::classical_bound_formula(4) == doctest::Approx(0.75));
  CHECK(ctx::classical_bound_formula(6) == doctest::Approx(0.625));
  CHECK(ctx::classical_bound_formula(16) ==
        doctest::Approx(0.5 + std::pow(2.0, -8.0)));
}

TEST_CASE("exhaustive classical optimum") {
  // Enumeration over all deterministic strategies. Matches the
  // floor-formula at even N; at odd N the tight value is
  // 1/2 + 2^{-ceil(N/2)}, strictly below the formula.
  const double expected[] = {1.0, 0.75, 0.75, 0.625, 0.625};
  for (size_t n = 2; n <= 6; ++n) {
    ctx::GhzClassicalSearch s = ctx::classical_optimal_exhaustive(n);
    CHECK(s.win_probability == doctest::Approx(expected[n - 2]));
    REQUIRE(s.strategy.size() == n);

    // The reported strategy achieves the reported value.
    size_t wins = 0, total = 0;
    for (uint64_t q = 0; q < (uint64_t{1} << n); ++q) {
      int wx = 0;
      for (size_t j = 0; j < n; ++j) wx += int((q >> j) & 1);
      if (wx % 2) continue;
      int parity = 0;
      for (size_t j = 0; j < n; ++j) {
        int xj = int((q >> j) & 1);
        int a = s.strategy[j] & 1;
        int b = (s.strategy[j] >> 1) & 1;
        parity ^= (a + b * xj) & 1;
      }
      ++total;
      if (parity == ((wx / 2) & 1)) ++wins;
    }
    CHECK(double(wins) / double(total) ==
          doctest::Approx(s.win_probability));
  }
  CHECK_THROWS(ctx::classical_optimal_exhaustive(1));
  CHECK_THROWS(ctx::classical_optimal_exhaustive(7));
}

TEST_CASE("quantum beats every classical strategy at n >= 4") {
  for (size_t n : {4ul, 5ul, 6ul}) {
    CHECK(ctx::classical_optimal_exhaustive(n).win_probability < 1.0);
  }
}
