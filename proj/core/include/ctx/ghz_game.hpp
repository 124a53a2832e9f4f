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

#ifndef CTX_GHZ_GAME_HPP
#define CTX_GHZ_GAME_HPP

#include <cstdint>
#include <vector>

#include "ctx/circuit.hpp"
#include "ctx/grid.hpp"
#include "ctx/noise.hpp"
#include "ctx/rng.hpp"

namespace ctx {

/// A GHZ preparation produced by randomized BFS growth on a grid.
/// attach_moment[q] is the moment of the CZ that entangled q (for the
/// root, its first CZ); idle time until the end of the circuit follows.
struct GhzGrowth {
  Circuit circuit{1};
  size_t root = 0;
  std::vector<int> attach_moment;
};

/// Randomized BFS: H on the root, then frontier expansion in shuffled
/// order, each edge realized as {H, CZ, H} on the target.
GhzGrowth bfs_growth_circuit(const GridGraph& g, size_t root, Rng& rng);

/// Growth on the near-square grid for n qubits, rooted at the center.
GhzGrowth ghz_growth(size_t n, Rng& rng);

/// Idle duration per qubit from entanglement to circuit end, in the unit
/// of moment_duration.
std::vector<double> idle_times(const GhzGrowth& growth,
                               double moment_duration);

/// Uniform over the 2^{N-1} even-weight question vectors.
std::vector<uint8_t> sample_questions(size_t n, Rng& rng);

/// Growth circuit + per-player strategy (S if x_j = 1, then H) + full
/// measurement with keys "m<q>".
Circuit build_ghz_game_circuit(const GhzGrowth& growth,
                               const std::vector<uint8_t>& x);

/// Win condition: sum(y) == sum(x)/2 (mod 2).
bool ghz_win(const std::vector<uint8_t>& x, const MeasurementRecord& y);

bool play_ghz_game(const GhzGrowth& growth, const std::vector<uint8_t>& x,
                   const NoiseParams& p, const MechanismToggles& toggles,
                   Rng& rng);

/// 1/2 + 2^{-floor(N/2)}. Disagrees with the exhaustive optimum at small
/// N (e.g. N = 3); the enumeration below is authoritative there.
double classical_bound_formula(size_t n);

struct GhzClassicalSearch {
  double win_probability;
  /// Per player: response f(x) = a + b x (mod 2), encoded a | (b << 1).
  std::vector<int> strategy;
};

/// Exhaustive maximum over the 4^N deterministic per-player response
/// functions, averaged over the uniform even-weight questions. N in 2..6.
GhzClassicalSearch classical_optimal_exhaustive(size_t n);

}  // namespace ctx

#endif  // CTX_GHZ_GAME_HPP
