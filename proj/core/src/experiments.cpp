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

#include "ctx/experiments.hpp"

#include <atomic>
#include <filesystem>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ctx/ghz_budget.hpp"
#include "ctx/ghz_game.hpp"
#include "ctx/hlf.hpp"
#include "ctx/ksb.hpp"
#include "ctx/magic_square.hpp"
#include "ctx/plot.hpp"
#include "ctx/report.hpp"

namespace ctx {

void parallel_for(size_t count, size_t threads,
                  const std::function<void(size_t)>& fn) {
  if (count == 0) return;
  if (threads <= 1 || count == 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  size_t n_threads = std::min(threads, count);
  pool.reserve(n_threads);
  for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

namespace fs = std::filesystem;

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (fs::path(cfg.out_dir) / name).string();
}

KsbInitialState ksb_init_from(const std::string& s) {
  if (s == "plus") return KsbInitialState::Plus;
  if (s == "bell") return KsbInitialState::Bell;
  return KsbInitialState::Zero;
}

RunArtifacts run_magic_square(const RunConfig& cfg) {
  std::vector<size_t> wins(9, 0);
  parallel_for(9, cfg.threads, [&](size_t game) {
    int j = int(game / 3), k = int(game % 3);
    MagicSquareCircuit circ = cfg.variation == 1 ? build_variation_1(j, k)
                                                 : build_variation_2(j, k);
    Rng rng = make_rng(cfg.seed, 10, game);
    size_t w = 0;
    for (size_t s = 0; s < cfg.shots; ++s) {
      MeasurementRecord rec =
          run_noisy(circ.circuit, cfg.noise, cfg.toggles, rng);
      w += decode_magic_square(circ, rec).win;
    }
    wins[game] = w;
  });

  RunArtifacts art;
  std::string games_csv = out_path(cfg, "magic_square_games.csv");
  {
    CsvWriter csv(games_csv, {"variation", "j", "k", "shots", "wins",
                              "win_rate", "sigma_binomial"});
    for (size_t game = 0; game < 9; ++game) {
      SummaryStats st = binomial_stats(wins[game], cfg.shots);
      csv.add_row({csv_cell(cfg.variation), csv_cell(int(game / 3)),
                   csv_cell(int(game % 3)), csv_cell(cfg.shots),
                   csv_cell(wins[game]), csv_cell(st.mean),
                   csv_cell(st.sigma)});
    }
  }
  size_t total_wins = 0;
  for (size_t w : wins) total_wins += w;
  SummaryStats overall = binomial_stats(total_wins, 9 * cfg.shots);
  std::string summary_csv = out_path(cfg, "magic_square_summary.csv");
  {
    CsvWriter csv(summary_csv, {"variation", "shots_total", "win_rate",
                                "sigma_binomial", "classical_optimum"});
    csv.add_row({csv_cell(cfg.variation), csv_cell(9 * cfg.shots),
                 csv_cell(overall.mean), csv_cell(overall.sigma),
                 csv_cell(8.0 / 9.0)});
  }
  PlotSpec plot;
  plot.title = "Magic square, variation " + std::to_string(cfg.variation);
  plot.x_label = "game index (3j + k)";
  plot.y_label = "win rate";
  PlotSeries series;
  series.label = "simulated";
  series.line = false;
  for (size_t game = 0; game < 9; ++game) {
    SummaryStats st = binomial_stats(wins[game], cfg.shots);
    series.x.push_back(double(game));
    series.y.push_back(st.mean);
    series.yerr.push_back(st.sigma);
  }
  plot.series.push_back(series);
  plot.hlines.push_back({8.0 / 9.0, "classical 8/9"});
  std::string plot_svg = out_path(cfg, "magic_square.svg");
  write_svg_plot(plot_svg, plot);
  art.files = {games_csv, summary_csv, plot_svg};
  return art;
}

RunArtifacts run_ksb(const RunConfig& cfg) {
  Rng seq_rng = make_rng(cfg.seed, 20);
  std::vector<Context> seq = random_context_sequence(cfg.contexts, seq_rng);
  KsbCircuit kc = build_ksb_circuit(seq, ksb_init_from(cfg.ksb_init));
  std::vector<std::vector<ContextOutcome>> shots(cfg.shots);
  parallel_for(cfg.shots, cfg.threads, [&](size_t s) {
    Rng rng = make_rng(cfg.seed, 21, s);
    shots[s] = run_ksb_shot(kc, cfg.noise, cfg.toggles, rng);
  });
  KsbSummary summary = chi_ksb(shots);
  auto agree = p_agree_stats(shots);
  NchvSearch nchv = nchv_bound_exhaustive();

  RunArtifacts art;
  std::string ctx_csv = out_path(cfg, "ksb_contexts.csv");
  {
    CsvWriter csv(ctx_csv, {"kind", "index", "mean", "sigma"});
    for (int i = 0; i < 3; ++i) {
      // Count per class for the binomial sigma.
      size_t n_row = 0, n_col = 0, pos_row = 0, pos_col = 0;
      for (const auto& shot : shots) {
        for (const ContextOutcome& o : shot) {
          if (o.ctx.index != i) continue;
          if (o.ctx.is_row) {
            ++n_row;
            pos_row += o.product > 0;
          } else {
            ++n_col;
            pos_col += o.product > 0;
          }
        }
      }
      SummaryStats r = binomial_stats(pos_row, n_row);
      SummaryStats c = binomial_stats(pos_col, n_col);
      csv.add_row({"row", csv_cell(i), csv_cell(summary.row_mean[i]),
                   csv_cell(2.0 * r.sigma)});
      csv.add_row({"col", csv_cell(i), csv_cell(summary.col_mean[i]),
                   csv_cell(2.0 * c.sigma)});
    }
  }
  std::string summary_csv = out_path(cfg, "ksb_summary.csv");
  {
    CsvWriter csv(summary_csv, {"chi", "sigma", "nchv_bound",
                                "quantum_bound"});
    csv.add_row({csv_cell(summary.chi), csv_cell(summary.sigma),
                 csv_cell(nchv.max_chi), csv_cell(6)});
  }
  std::string agree_csv = out_path(cfg, "ksb_p_agree.csv");
  {
    CsvWriter csv(agree_csv,
                  {"row", "col", "compatible_n", "compatible_rate",
                   "compatible_sigma", "incompatible_n", "incompatible_rate",
                   "incompatible_sigma"});
    for (const PauliAgreement& a : agree) {
      double cs = a.compatible_n
                      ? binomial_stats(a.compatible_agree, a.compatible_n)
                            .sigma
                      : 0.0;
      double is = a.incompatible_n
                      ? binomial_stats(a.incompatible_agree, a.incompatible_n)
                            .sigma
                      : 0.0;
      csv.add_row({csv_cell(a.row), csv_cell(a.col),
                   csv_cell(a.compatible_n), csv_cell(a.compatible_rate()),
                   csv_cell(cs), csv_cell(a.incompatible_n),
                   csv_cell(a.incompatible_rate()), csv_cell(is)});
    }
  }
  PlotSpec plot;
  plot.title = "Context means, chi = " + format_value(summary.chi);
  plot.x_label = "context (R1..R3, C1..C3, chi)";
  plot.y_label = "value";
  PlotSeries means;
  means.label = "context mean";
  means.line = false;
  for (int i = 0; i < 3; ++i) {
    means.x.push_back(double(i + 1));
    means.y.push_back(summary.row_mean[i]);
  }
  for (int i = 0; i < 3; ++i) {
    means.x.push_back(double(i + 4));
    means.y.push_back(summary.col_mean[i]);
  }
  plot.series.push_back(means);
  PlotSeries chi_pt;
  chi_pt.label = "chi";
  chi_pt.line = false;
  chi_pt.color = "#b2331f";
  chi_pt.x = {7.0};
  chi_pt.y = {summary.chi};
  chi_pt.yerr = {summary.sigma};
  plot.series.push_back(chi_pt);
  plot.hlines.push_back({4.0, "NCHV bound 4"});
  plot.hlines.push_back({6.0, "quantum limit 6", "#4a9645"});
  std::string plot_svg = out_path(cfg, "ksb.svg");
  write_svg_plot(plot_svg, plot);
  art.files = {ctx_csv, summary_csv, agree_csv, plot_svg};
  return art;
}

RunArtifacts run_ghz(const RunConfig& cfg) {
  RunArtifacts art;
  std::string games_csv = out_path(cfg, "ghz_games.csv");
  std::string summary_csv = out_path(cfg, "ghz_summary.csv");
  CsvWriter csv(games_csv, {"N", "game_id", "growth_seed", "shots", "wins",
                            "win_rate"});
  CsvWriter sum_csv(summary_csv, {"N", "win_rate", "sigma_ensemble",
                                  "classical_bound_formula"});
  PlotSeries quantum;
  quantum.label = "simulated win";
  PlotSeries classical;
  classical.label = "classical bound";
  classical.color = "#888888";
  classical.markers = false;

  for (size_t n : cfg.ghz_n) {
    // One replicate per growth pattern; each replicate plays every game.
    std::vector<std::vector<size_t>> wins(
        cfg.growth_patterns, std::vector<size_t>(cfg.question_sets, 0));
    std::vector<std::vector<uint8_t>> questions(cfg.question_sets);
    for (size_t g = 0; g < cfg.question_sets; ++g) {
      Rng qrng = make_rng(cfg.seed, 30, n, g);
      questions[g] = sample_questions(n, qrng);
    }
    parallel_for(cfg.growth_patterns, cfg.threads, [&](size_t pat) {
      Rng grow_rng = make_rng(cfg.seed, 31, n, pat);
      GhzGrowth growth = ghz_growth(n, grow_rng);
      for (size_t g = 0; g < cfg.question_sets; ++g) {
        Circuit game = build_ghz_game_circuit(growth, questions[g]);
        Rng rng = make_rng(cfg.seed, 32, n, pat * 65536 + g);
        size_t w = 0;
        for (size_t s = 0; s < cfg.shots; ++s) {
          MeasurementRecord rec = run_noisy(game, cfg.noise, cfg.toggles, rng);
          w += ghz_win(questions[g], rec);
        }
        wins[pat][g] = w;
      }
    });
    std::vector<double> replicate_rates;
    replicate_rates.reserve(cfg.growth_patterns);
    for (size_t pat = 0; pat < cfg.growth_patterns; ++pat) {
      size_t w = 0;
      for (size_t g = 0; g < cfg.question_sets; ++g) {
        w += wins[pat][g];
        csv.add_row({csv_cell(n), csv_cell(g), csv_cell(pat),
                     csv_cell(cfg.shots), csv_cell(wins[pat][g]),
                     csv_cell(double(wins[pat][g]) / double(cfg.shots))});
      }
      replicate_rates.push_back(double(w) /
                                double(cfg.question_sets * cfg.shots));
    }
    SummaryStats st = ensemble_stats(replicate_rates);
    double bound = classical_bound_formula(n);
    sum_csv.add_row({csv_cell(n), csv_cell(st.mean), csv_cell(st.sigma),
                     csv_cell(bound)});
    quantum.x.push_back(double(n));
    quantum.y.push_back(st.mean);
    quantum.yerr.push_back(st.sigma);
    classical.x.push_back(double(n));
    classical.y.push_back(bound);
  }
  csv.close();
  sum_csv.close();
  PlotSpec plot;
  plot.title = "GHZ parity game";
  plot.x_label = "players N";
  plot.y_label = "win probability";
  plot.series = {quantum, classical};
  plot.hlines.push_back({0.5, "coin flip"});
  std::string plot_svg = out_path(cfg, "ghz_game.svg");
  write_svg_plot(plot_svg, plot);
  art.files = {games_csv, summary_csv, plot_svg};
  return art;
}

RunArtifacts run_hlf(const RunConfig& cfg) {
  size_t active = cfg.active ? cfg.active : cfg.rows * cfg.cols;
  GridGraph grid(cfg.rows, cfg.cols, active);
  const size_t n = grid.num_active();
  struct InstanceResult {
    size_t correct;
    double fraction;
  };
  std::vector<InstanceResult> results(cfg.instances);
  parallel_for(cfg.instances, cfg.threads, [&](size_t i) {
    Rng inst_rng = make_rng(cfg.seed, 40, i);
    HlfInstance inst = random_instance(grid, cfg.p_gate, inst_rng);
    inst.seed = derive_seed(cfg.seed, 40, i);
    Rng rng = make_rng(cfg.seed, 41, i);
    std::vector<Gf2Vec> zs = solve(inst, cfg.noise, cfg.toggles, cfg.shots,
                                   rng);
    size_t correct = 0;
    for (const Gf2Vec& z : zs) correct += verify_solution(inst, z);
    results[i] = {correct, double(correct) / double(cfg.shots)};
  });
  double l_classical = classical_depth_bound(grid);

  RunArtifacts art;
  std::string inst_csv = out_path(cfg, "hlf_instances.csv");
  {
    CsvWriter csv(inst_csv, {"n", "instance_id", "shots", "correct",
                             "fraction", "effective_depth", "L_classical"});
    for (size_t i = 0; i < cfg.instances; ++i) {
      std::string depth = results[i].fraction > 0.0
                              ? csv_cell(effective_depth(results[i].fraction))
                              : "inf";
      csv.add_row({csv_cell(n), csv_cell(i), csv_cell(cfg.shots),
                   csv_cell(results[i].correct),
                   csv_cell(results[i].fraction), depth,
                   csv_cell(l_classical)});
    }
  }
  std::vector<double> fractions;
  fractions.reserve(cfg.instances);
  for (const auto& r : results) fractions.push_back(r.fraction);
  SummaryStats st = ensemble_stats(fractions);
  std::string summary_csv = out_path(cfg, "hlf_summary.csv");
  double mean_depth = st.mean > 0.0 ? effective_depth(st.mean) : 0.0;
  {
    CsvWriter csv(summary_csv,
                  {"n", "instances", "shots", "fraction_mean",
                   "sigma_ensemble", "effective_depth", "tts",
                   "L_classical"});
    std::string depth_cell = st.mean > 0.0 ? csv_cell(mean_depth) : "inf";
    std::string tts_cell = st.mean > 0.0 ? csv_cell(tts(4.0, st.mean)) : "inf";
    csv.add_row({csv_cell(n), csv_cell(cfg.instances), csv_cell(cfg.shots),
                 csv_cell(st.mean), csv_cell(st.sigma), depth_cell, tts_cell,
                 csv_cell(l_classical)});
  }
  PlotSpec plot;
  plot.title = "Hidden linear function";
  plot.x_label = "qubits n";
  plot.y_label = "effective depth";
  PlotSeries series;
  series.label = "quantum effective depth";
  series.line = false;
  series.x = {double(n)};
  series.y = {st.mean > 0.0 ? mean_depth : 0.0};
  plot.series.push_back(series);
  plot.hlines.push_back({l_classical, "classical bound"});
  plot.hlines.push_back({4.0, "noiseless depth 4", "#4a9645"});
  std::string plot_svg = out_path(cfg, "hlf.svg");
  write_svg_plot(plot_svg, plot);
  art.files = {inst_csv, summary_csv, plot_svg};
  return art;
}

}  // namespace

RunArtifacts run_experiment(const RunConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  if (cfg.experiment == "magic_square") return run_magic_square(cfg);
  if (cfg.experiment == "ksb") return run_ksb(cfg);
  if (cfg.experiment == "ghz_game") return run_ghz(cfg);
  if (cfg.experiment == "hlf") return run_hlf(cfg);
  throw ConfigError("unknown experiment '" + cfg.experiment + "'");
}

}  // namespace ctx
