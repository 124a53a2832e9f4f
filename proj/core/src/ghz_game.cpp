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

#include "ctx/ghz_game.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ctx {

GhzGrowth bfs_growth_circuit(const GridGraph& g, size_t root, Rng& rng) {
  const size_t n = g.num_active();
  if (root >= n) throw std::out_of_range("root outside active region");
  if (!g.is_connected()) throw std::invalid_argument("grid is disconnected");
  GhzGrowth growth;
  growth.circuit = Circuit(n);
  growth.root = root;
  growth.attach_moment.assign(n, 0);
  Circuit& c = growth.circuit;
  c.append(GateKind::H, root);
  if (n == 1) return growth;
  std::vector<char> visited(n, 0);
  visited[root] = 1;
  std::queue<size_t> frontier;
  frontier.push(root);
  bool root_attached = false;
  while (!frontier.empty()) {
    size_t q = frontier.front();
    frontier.pop();
    std::vector<size_t> nbrs = g.neighbors(q);
    std::shuffle(nbrs.begin(), nbrs.end(), rng);
    for (size_t nb : nbrs) {
      if (visited[nb]) continue;
      visited[nb] = 1;
      // CNOT(q -> nb) realized as {H, CZ, H} on the target.
      c.append(GateKind::H, nb);
      c.append(GateKind::CZ, q, nb);
      int cz_moment = c.ops().back().moment;
      c.append(GateKind::H, nb);
      growth.attach_moment[nb] = cz_moment;
      if (!root_attached && q == root) {
        growth.attach_moment[root] = cz_moment;
        root_attached = true;
      }
      frontier.push(nb);
    }
  }
  return growth;
}

GhzGrowth ghz_growth(size_t n, Rng& rng) {
  GridGraph g = GridGraph::square_for(n);
  return bfs_growth_circuit(g, g.center_node(), rng);
}

std::vector<double> idle_times(const GhzGrowth& growth,
                               double moment_duration) {
  int end = growth.circuit.num_moments() - 1;
  std::vector<double> t(growth.attach_moment.size());
  for (size_t q = 0; q < t.size(); ++q) {
    t[q] = double(end - growth.attach_moment[q]) * moment_duration;
    if (t[q] < 0.0) t[q] = 0.0;
  }
  return t;
}

std::vector<uint8_t> sample_questions(size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("game needs at least two players");
  std::vector<uint8_t> x(n);
  uint8_t parity = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    x[i] = random_bit(rng);
    parity ^= x[i];
  }
  x[n - 1] = parity;
  return x;
}

Circuit build_ghz_game_circuit(const GhzGrowth& growth,
                               const std::vector<uint8_t>& x) {
  const size_t n = growth.circuit.num_qubits();
  if (x.size() != n) throw std::invalid_argument("question length mismatch");
  size_t weight = std::accumulate(x.begin(), x.end(), size_t{0});
  if (weight & 1) throw std::invalid_argument("question violates the promise");
  Circuit c = growth.circuit;
  c.barrier();
  for (size_t q = 0; q < n; ++q) {
    if (x[q]) c.append(GateKind::S, q);
    c.append(GateKind::H, q);
  }
  for (size_t q = 0; q < n; ++q) c.measure(q, "m" + std::to_string(q));
  return c;
}

bool ghz_win(const std::vector<uint8_t>& x, const MeasurementRecord& y) {
  size_t sum_x = std::accumulate(x.begin(), x.end(), size_t{0});
  size_t sum_y = 0;
  for (size_t i = 0; i < y.size(); ++i) sum_y += y[i];
  return (sum_y & 1) == ((sum_x / 2) & 1);
}

bool play_ghz_game(const GhzGrowth& growth, const std::vector<uint8_t>& x,
                   const NoiseParams& p, const MechanismToggles& toggles,
                   Rng& rng) {
  Circuit c = build_ghz_game_circuit(growth, x);
  MeasurementRecord rec = run_noisy(c, p, toggles, rng);
  return ghz_win(x, rec);
}

double classical_bound_formula(size_t n) {
  if (n < 2) throw std::invalid_argument("bound defined for N >= 2");
  return 0.5 + std::pow(2.0, -double(n / 2));
}

GhzClassicalSearch classical_optimal_exhaustive(size_t n) {
  if (n < 2 || n > 6) throw std::invalid_argument("enumeration limited to N in 2..6");
  const size_t num_questions = size_t{1} << (n - 1);
  const size_t num_strategies = size_t{1} << (2 * n);
  // Precompute the even-weight questions.
  std::vector<std::vector<uint8_t>> questions;
  questions.reserve(num_questions);
  for (size_t m = 0; m < (size_t{1} << n); ++m) {
    if (std::popcount(m) % 2 == 0) {
      std::vector<uint8_t> x(n);
      for (size_t q = 0; q < n; ++q) x[q] = (m >> q) & 1;
      questions.push_back(std::move(x));
    }
  }
  size_t best_wins = 0;
  size_t best_strategy = 0;
  for (size_t s = 0; s < num_strategies; ++s) {
    size_t wins = 0;
    for (const auto& x : questions) {
      size_t sum_x = 0;
      int parity_y = 0;
      for (size_t j = 0; j < n; ++j) {
        sum_x += x[j];
        int a = (s >> (2 * j)) & 1;
        int b = (s >> (2 * j + 1)) & 1;
        parity_y ^= a ^ (b & x[j]);
      }
      wins += size_t(parity_y) == ((sum_x / 2) & 1);
    }
    if (wins > best_wins) {
      best_wins = wins;
      best_strategy = s;
    }
  }
  GhzClassicalSearch res;
  res.win_probability = double(best_wins) / double(num_questions);
  res.strategy.resize(n);
  for (size_t j = 0; j < n; ++j) res.strategy[j] = (best_strategy >> (2 * j)) & 3;
  return res;
}

}  // namespace ctx
