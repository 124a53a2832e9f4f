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

#include <benchmark/benchmark.h>

#include "ctx/ghz_game.hpp"
#include "ctx/hlf.hpp"
#include "ctx/ksb.hpp"
#include "ctx/rng.hpp"
#include "ctx/tableau.hpp"

namespace {

void bm_tableau_gates(benchmark::State& state) {
  size_t n = size_t(state.range(0));
  ctx::StabilizerTableau t(n);
  size_t q = 0;
  for (auto _ : state) {
    t.apply(ctx::GateKind::H, q);
    t.apply(ctx::GateKind::CZ, q, (q + 1) % n);
    t.apply(ctx::GateKind::S, (q + 1) % n);
    q = (q + 1) % n;
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * 3);
}
BENCHMARK(bm_tableau_gates)->Arg(16)->Arg(64)->Arg(256);

void bm_tableau_measure(benchmark::State& state) {
  size_t n = size_t(state.range(0));
  ctx::Rng rng = ctx::make_rng(7, 0, 0);
  ctx::StabilizerTableau t(n);
  for (size_t q = 0; q < n; ++q) t.apply(ctx::GateKind::H, q);
  size_t q = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.measure_z(q, rng));
    t.apply(ctx::GateKind::H, q);
    q = (q + 1) % n;
  }
}
BENCHMARK(bm_tableau_measure)->Arg(16)->Arg(64)->Arg(256);

void bm_ghz_shot(benchmark::State& state) {
  size_t n = size_t(state.range(0));
  ctx::Rng grow_rng = ctx::make_rng(11, n, 0);
  ctx::GhzGrowth growth = ctx::ghz_growth(n, grow_rng);
  ctx::Rng q_rng = ctx::make_rng(11, n, 1);
  std::vector<unsigned char> x = ctx::sample_questions(n, q_rng);
  ctx::Circuit game = ctx::build_ghz_game_circuit(growth, x);
  ctx::Rng shot_rng = ctx::make_rng(11, n, 2);
  for (auto _ : state) {
    ctx::StabilizerTableau t(n);
    ctx::MeasurementRecord rec = ctx::run_circuit(t, game, shot_rng);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(bm_ghz_shot)->Arg(9)->Arg(25)->Arg(64);

void bm_hlf_solve_shot(benchmark::State& state) {
  size_t side = size_t(state.range(0));
  ctx::GridGraph g(side, side);
  ctx::Rng rng = ctx::make_rng(13, side, 0);
  ctx::HlfInstance inst = ctx::random_instance(g, 0.5, rng);
  ctx::NoiseParams p;
  ctx::MechanismToggles off = ctx::MechanismToggles::none();
  ctx::Rng solve_rng = ctx::make_rng(13, side, 1);
  for (auto _ : state) {
    std::vector<ctx::Gf2Vec> zs = ctx::solve(inst, p, off, 1, solve_rng);
    benchmark::DoNotOptimize(zs);
  }
}
BENCHMARK(bm_hlf_solve_shot)->Arg(3)->Arg(7)->Arg(10);

void bm_ksb_stream(benchmark::State& state) {
  size_t contexts = size_t(state.range(0));
  ctx::Rng seq_rng = ctx::make_rng(17, contexts, 0);
  ctx::KsbCircuit kc =
      ctx::build_ksb_circuit(ctx::random_context_sequence(contexts, seq_rng));
  ctx::NoiseParams p;
  ctx::MechanismToggles off = ctx::MechanismToggles::none();
  ctx::Rng shot_rng = ctx::make_rng(17, contexts, 1);
  for (auto _ : state) {
    auto outcomes = ctx::run_ksb_shot(kc, p, off, shot_rng);
    benchmark::DoNotOptimize(outcomes);
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(contexts));
}
BENCHMARK(bm_ksb_stream)->Arg(30)->Arg(180);

}  // namespace
