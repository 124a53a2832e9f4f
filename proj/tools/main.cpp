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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ctx/config.hpp"
#include "ctx/experiments.hpp"
#include "ctx/ghz_game.hpp"
#include "ctx/gf2.hpp"
#include "ctx/hlf.hpp"
#include "ctx/ksb.hpp"
#include "ctx/magic_square.hpp"

namespace {

int cmd_run(const std::string& config_path, const std::string& out_override,
            bool has_seed, uint64_t seed, bool has_threads, size_t threads) {
  ctx::RunConfig cfg = ctx::load_config_file(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  // CTXBENCH_OUT is the only environment override; flags still win.
  if (out_override.empty()) {
    if (const char* env = std::getenv("CTXBENCH_OUT")) {
      if (env[0] != '\0') cfg.out_dir = env;
    }
  }
  if (has_seed) cfg.seed = seed;
  if (has_threads) {
    if (threads == 0) throw ctx::ConfigError("threads must be >= 1");
    cfg.threads = threads;
  }
  ctx::RunArtifacts art = ctx::run_experiment(cfg);
  for (const std::string& f : art.files) std::cout << f << '\n';
  return 0;
}

int cmd_verify_hlf(const std::string& instance_path, const std::string& z_bits) {
  ctx::HlfInstance inst = ctx::load_instance_file(instance_path);
  if (z_bits.size() != inst.n()) {
    std::cerr << "z has " << z_bits.size() << " bits, instance has "
              << inst.n() << " qubits\n";
    return 2;
  }
  ctx::Gf2Vec z(inst.n());
  for (size_t i = 0; i < z_bits.size(); ++i) {
    if (z_bits[i] != '0' && z_bits[i] != '1') {
      std::cerr << "z must be a 0/1 bitstring\n";
      return 2;
    }
    z.set(i, z_bits[i] == '1');
  }
  bool ok = ctx::verify_solution(inst, z);
  std::cout << (ok ? "VALID" : "INVALID") << '\n';
  return ok ? 0 : 1;
}

int cmd_bounds(const std::string& experiment) {
  if (experiment == "magic_square") {
    ctx::ClassicalSearchResult r = ctx::optimal_classical_strategy();
    std::printf("classical_optimum %.10g\n", r.win_probability);
    std::printf("quantum_value 1\n");
    std::printf("optimal_strategy_pairs %zu\n", r.num_optimal_pairs);
  } else if (experiment == "ksb") {
    ctx::NchvSearch s = ctx::nchv_bound_exhaustive();
    std::printf("nchv_bound %d\n", s.max_chi);
    std::printf("quantum_bound 6\n");
  } else if (experiment == "ghz_game") {
    std::printf("classical_bound_formula(N) = 1/2 + 2^(-floor(N/2))\n");
    for (size_t n = 2; n <= 6; ++n) {
      ctx::GhzClassicalSearch s = ctx::classical_optimal_exhaustive(n);
      std::printf("N=%zu exhaustive %.10g formula %.10g\n", n,
                  s.win_probability, ctx::classical_bound_formula(n));
    }
  } else if (experiment == "hlf") {
    std::printf("quantum_depth 4\n");
    std::printf("classical_bound(n) = log2(edges + nodes)\n");
    for (size_t side : {3ul, 5ul, 7ul, 10ul}) {
      ctx::GridGraph g(side, side);
      std::printf("grid %zux%zu classical_bound %.10g\n", side, side,
                  ctx::classical_depth_bound(g));
    }
  } else {
    std::cerr << "unknown experiment '" << experiment
              << "' (magic_square | ksb | ghz_game | hlf)\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contextuality-bench experiment runner"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  uint64_t seed = 0;
  size_t threads = 0;
  CLI::App* run = app.add_subcommand("run", "Run a configured experiment");
  run->add_option("--config", config_path, "Config file (key=value)")
      ->required();
  run->add_option("--out", out_override, "Output directory override");
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "Master seed override");
  CLI::Option* threads_opt =
      run->add_option("--threads", threads, "Worker thread count override");

  std::string instance_path;
  std::string z_bits;
  CLI::App* verify =
      app.add_subcommand("verify-hlf", "Check a candidate HLF solution");
  verify->add_option("--instance", instance_path, "Saved instance file")
      ->required();
  verify->add_option("--z", z_bits, "Candidate solution bitstring")
      ->required();

  std::string experiment;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Print classical/quantum bounds");
  bounds->add_option("--experiment", experiment, "Experiment name")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(config_path, out_override, seed_opt->count() > 0, seed,
                     threads_opt->count() > 0, threads);
    }
    if (verify->parsed()) return cmd_verify_hlf(instance_path, z_bits);
    if (bounds->parsed()) return cmd_bounds(experiment);
  } catch (const ctx::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
