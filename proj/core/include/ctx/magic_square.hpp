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

#ifndef CTX_MAGIC_SQUARE_HPP
#define CTX_MAGIC_SQUARE_HPP

#include <array>
#include <string>

#include "ctx/circuit.hpp"
#include "ctx/noise.hpp"
#include "ctx/pauli.hpp"

namespace ctx {

/// The 3x3 table of signed two-qubit observables. Each row multiplies to
/// +II, each column to -II; both identities are checked symbolically in
/// tests.
using MeasurementPlan = std::array<std::array<PauliString, 3>, 3>;

MeasurementPlan magic_square_plan();

/// Places a signed two-qubit Pauli on qubits (a, b) of an n-qubit register.
PauliString embed_on_pair(const PauliString& p2, size_t n, size_t a, size_t b);

/// 4-qubit preparation of Bell pairs on (0,2) and (1,3). Alice holds
/// qubits 0,1 and Bob holds 2,3.
Circuit bell_pairs_circuit();

struct MagicSquareGameRecord {
  int variation;
  int j;                      // Alice's row, 0-based
  int k;                      // Bob's column, 0-based
  std::array<int, 3> alice;   // +/-1 entries of row j
  std::array<int, 3> bob;     // +/-1 entries of column k
  bool win;
};

/// How one cell's value is obtained from a shot record.
struct CellReadout {
  std::string key;   // measurement record key; empty if inferred
  int sign = +1;
  bool inferred = false;
};

/// A compiled game circuit plus the decoding map from records to +/-1
/// cell values. Build once per (variation, j, k), run many shots.
struct MagicSquareCircuit {
  Circuit circuit{1};
  int variation;
  int j;
  int k;
  std::array<CellReadout, 3> alice;
  std::array<CellReadout, 3> bob;
};

/// Variation I: each player measures the two lexicographically first
/// observables of their line in a compiled common eigenbasis and infers
/// the third from the product rule.
MagicSquareCircuit build_variation_1(int j, int k);

/// Variation II: 8 qubits (4 data, 2 ancillas per player); two
/// ancilla-mediated measurements plus one direct readout per player.
MagicSquareCircuit build_variation_2(int j, int k);

MagicSquareGameRecord decode_magic_square(const MagicSquareCircuit& game,
                                          const MeasurementRecord& rec);

/// Win rule. Variation I wins on a matching intersection (the product
/// rules hold by construction); Variation II additionally requires both
/// measured triples to satisfy their product rules.
bool magic_square_win(const MagicSquareGameRecord& r);

MagicSquareGameRecord play_variation_1(int j, int k, const NoiseParams& p,
                                       const MechanismToggles& toggles,
                                       Rng& rng);
MagicSquareGameRecord play_variation_2(int j, int k, const NoiseParams& p,
                                       const MechanismToggles& toggles,
                                       Rng& rng);

struct ClassicalSearchResult {
  double win_probability;
  size_t num_optimal_pairs;
  std::array<std::array<int, 3>, 3> alice;  // row-strategy table
  std::array<std::array<int, 3>, 3> bob;    // column-strategy table
};

/// Exhaustive search over the 64 x 64 deterministic strategy pairs
/// respecting the product rules. The maximum is 8/9.
ClassicalSearchResult optimal_classical_strategy();

struct ErrorBudgetRow {
  std::string mechanism;
  double win_rate;
  double loss;
};

/// Per-mechanism loss attribution: all-on plus one-mechanism-at-a-time
/// runs, each averaged over the 9 uniformly weighted games.
std::array<ErrorBudgetRow, 4> magic_square_error_budget(int variation,
                                                        const NoiseParams& p,
                                                        size_t shots_per_game,
                                                        uint64_t seed);

}  // namespace ctx

#endif  // CTX_MAGIC_SQUARE_HPP
