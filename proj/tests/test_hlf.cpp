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
#include <set>
#include <sstream>

#include "ctx/gf2.hpp"
#include "ctx/grid.hpp"
#include "ctx/hlf.hpp"
#include "ctx/rng.hpp"

using ctx::Gf2Mat;
using ctx::Gf2Vec;
using ctx::GridGraph;
using ctx::HlfInstance;
using ctx::MechanismToggles;
using ctx::NoiseParams;

namespace {

Gf2Vec vec_from_bits(std::initializer_list<int> bits) {
  Gf2Vec v(bits.size());
  size_t i = 0;
  for (int b : bits) v.set(i++, b != 0);
  return v;
}

}  // namespace

TEST_CASE("gf2 vector basics") {
  Gf2Vec a = vec_from_bits({1, 0, 1, 1});
  Gf2Vec b = vec_from_bits({0, 1, 1, 0});
  CHECK(a.dot(b));           // one shared position
  CHECK(a.dot(a));           // self-dot is the weight parity (3 is odd)
  CHECK_FALSE(b.dot(b));
  a ^= b;
  CHECK(a == vec_from_bits({1, 1, 0, 1}));
  CHECK_FALSE(a.is_zero());
  CHECK(Gf2Vec(4).is_zero());
}

TEST_CASE("gf2 matrix rank and null space") {
  Gf2Mat m(3, 4);
  // rows: 1100, 0110, 1010 (third = first + second)
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 1, true);
  m.set(1, 2, true);
  m.set(2, 0, true);
  m.set(2, 2, true);
  CHECK(m.rank() == 2);
  std::vector<Gf2Vec> ns = m.null_space();
  CHECK(ns.size() == 2);
  for (const Gf2Vec& v : ns) {
    CHECK(m.mul(v).is_zero());
    CHECK_FALSE(v.is_zero());
  }
  // Null-space vectors are linearly independent.
  Gf2Vec sum = ns[0];
  sum ^= ns[1];
  CHECK_FALSE(sum.is_zero());
}

TEST_CASE("null space matches exhaustive kernel scan") {
  ctx::Rng rng = ctx::make_rng(111, 0);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 3 + rng() % 8;
    Gf2Mat m(n, n);
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = r; c < n; ++c) {
        bool v = ctx::random_bit(rng);
        m.set(r, c, v);
        m.set(c, r, v);
      }
    }
    std::vector<Gf2Vec> basis = m.null_space();
    // Exhaustive kernel size must equal 2^nullity, and every basis
    // combination must be in the kernel.
    size_t kernel = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
      Gf2Vec v(n);
      for (size_t i = 0; i < n; ++i) v.set(i, (x >> i) & 1);
      if (m.mul(v).is_zero()) ++kernel;
    }
    CHECK(kernel == (size_t{1} << basis.size()));
    CHECK(m.rank() + basis.size() == n);
  }
}

TEST_CASE("quadratic form arithmetic") {
  // A = [[1,1],[1,0]]: q(x) = x0 + 2 x0 x1 (mod 4).
  Gf2Mat a(2, 2);
  a.set(0, 0, true);
  a.set(0, 1, true);
  a.set(1, 0, true);
  CHECK(ctx::quadratic_form(a, vec_from_bits({0, 0})) == 0);
  CHECK(ctx::quadratic_form(a, vec_from_bits({1, 0})) == 1);
  CHECK(ctx::quadratic_form(a, vec_from_bits({0, 1})) == 0);
  CHECK(ctx::quadratic_form(a, vec_from_bits({1, 1})) == 3);
}

TEST_CASE("instance sampling respects the grid") {
  ctx::Rng rng = ctx::make_rng(112, 0);
  GridGraph g(3, 4);
  HlfInstance inst = ctx::random_instance(g, 0.5, rng);
  CHECK(inst.n() == 12);
  for (size_t i = 0; i < 12; ++i) {
    for (size_t j = i + 1; j < 12; ++j) {
      CHECK(inst.a.get(i, j) == inst.a.get(j, i));
      if (inst.a.get(i, j)) {
        auto [r1, c1] = g.coord(i);
        auto [r2, c2] = g.coord(j);
        size_t dist = (r1 > r2 ? r1 - r2 : r2 - r1) +
                      (c1 > c2 ? c1 - c2 : c2 - c1);
        CHECK(dist == 1);
      }
    }
  }
}

TEST_CASE("circuit depth is at most four two-qubit layers") {
  ctx::Rng rng = ctx::make_rng(113, 0);
  for (int trial = 0; trial < 10; ++trial) {
    GridGraph g(2 + rng() % 4, 2 + rng() % 5);
    HlfInstance inst = ctx::random_instance(g, 0.9, rng);
    ctx::Circuit c = ctx::build_hlf_circuit(inst);
    CHECK(c.two_qubit_moment_count() <= 4);
    CHECK(c.num_measurements() == inst.n());
  }
  // A fully loaded instance uses exactly 4 layers.
  GridGraph g(3, 3);
  ctx::Rng all_rng = ctx::make_rng(113, 1);
  HlfInstance full = ctx::random_instance(g, 1.0, all_rng);
  CHECK(ctx::build_hlf_circuit(full).two_qubit_moment_count() == 4);
}

TEST_CASE("noiseless solve always verifies") {
  NoiseParams quiet;
  ctx::Rng rng = ctx::make_rng(114, 0);
  for (const GridGraph& g :
       {GridGraph(3, 3), GridGraph(4, 5), GridGraph(4, 4, 13)}) {
    for (int trial = 0; trial < 10; ++trial) {
      HlfInstance inst = ctx::random_instance(g, 0.5, rng);
      std::vector<Gf2Vec> zs =
          ctx::solve(inst, quiet, MechanismToggles::all(), 20, rng);
      REQUIRE(zs.size() == 20);
      for (const Gf2Vec& z : zs) CHECK(ctx::verify_solution(inst, z));
    }
  }
}

TEST_CASE("verifier agrees with brute force") {
  NoiseParams quiet;
  ctx::Rng rng = ctx::make_rng(115, 0);
  for (int trial = 0; trial < 25; ++trial) {
    GridGraph g(2 + rng() % 2, 2 + rng() % 3);
    HlfInstance inst = ctx::random_instance(g, 0.5, rng);
    const size_t n = inst.n();
    std::set<std::vector<bool>> brute;
    for (const Gf2Vec& z : ctx::brute_force_solutions(inst)) {
      std::vector<bool> bits(n);
      for (size_t i = 0; i < n; ++i) bits[i] = z.get(i);
      brute.insert(bits);
    }
    CHECK_FALSE(brute.empty());
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
      Gf2Vec z(n);
      std::vector<bool> bits(n);
      for (size_t i = 0; i < n; ++i) {
        z.set(i, (x >> i) & 1);
        bits[i] = (x >> i) & 1;
      }
      CHECK(ctx::verify_solution(inst, z) == (brute.count(bits) > 0));
    }
  }
}

TEST_CASE("solutions respect kernel linearity") {
  // If z solves the instance, q(b) = 2 z.b mod 4 on every kernel vector b,
  // so two solutions agree on the kernel-dual component.
  NoiseParams quiet;
  ctx::Rng rng = ctx::make_rng(116, 0);
  HlfInstance inst = ctx::random_instance(GridGraph(3, 3), 0.5, rng);
  std::vector<Gf2Vec> zs =
      ctx::solve(inst, quiet, MechanismToggles::all(), 10, rng);
  std::vector<Gf2Vec> kernel = inst.a.null_space();
  for (const Gf2Vec& z : zs) {
    for (const Gf2Vec& b : kernel) {
      int q = ctx::quadratic_form(inst.a, b);
      CHECK(q % 2 == 0);
      CHECK((((z.dot(b) ? 2 : 0) - q) % 4 + 4) % 4 == 0);
    }
  }
}

TEST_CASE("depth metrics") {
  CHECK(ctx::effective_depth(1.0) == doctest::Approx(4.0));
  CHECK(ctx::effective_depth(0.5) == doctest::Approx(8.0));
  CHECK_THROWS(ctx::effective_depth(0.0));
  CHECK(ctx::tts(4.0, 0.8) == doctest::Approx(5.0));
  CHECK(ctx::classical_depth_bound(GridGraph(3, 3)) ==
        doctest::Approx(std::log2(21.0)));
  CHECK(ctx::bravyi_bound_extrapolation(256, 16.0) == doctest::Approx(8.0));
}

TEST_CASE("instance files round trip") {
  ctx::Rng rng = ctx::make_rng(117, 0);
  for (const GridGraph& g : {GridGraph(3, 3), GridGraph(4, 4, 13)}) {
    HlfInstance inst = ctx::random_instance(g, 0.37, rng);
    inst.seed = 9001;
    std::stringstream ss;
    ctx::save_instance(inst, ss);
    HlfInstance back = ctx::load_instance(ss);
    CHECK(back.grid.rows() == inst.grid.rows());
    CHECK(back.grid.cols() == inst.grid.cols());
    CHECK(back.grid.num_active() == inst.grid.num_active());
    CHECK(back.p_gate == doctest::Approx(inst.p_gate));
    CHECK(back.seed == inst.seed);
    for (size_t i = 0; i < inst.n(); ++i) {
      for (size_t j = 0; j < inst.n(); ++j) {
        CHECK(back.a.get(i, j) == inst.a.get(i, j));
      }
    }
  }
}

TEST_CASE("noise reduces solve fidelity but not to zero") {
  NoiseParams p;
  p.e_p_sq = 5e-3;
  p.e_p_2q = 2e-2;
  p.set_symmetric_readout(3e-2);
  ctx::Rng rng = ctx::make_rng(118, 0);
  HlfInstance inst = ctx::random_instance(GridGraph(3, 4), 0.5, rng);
  std::vector<Gf2Vec> zs =
      ctx::solve(inst, p, MechanismToggles::all(), 500, rng);
  size_t good = 0;
  for (const Gf2Vec& z : zs) good += ctx::verify_solution(inst, z);
  double frac = double(good) / double(zs.size());
  CHECK(frac > 0.5);
  CHECK(frac < 1.0);
}
