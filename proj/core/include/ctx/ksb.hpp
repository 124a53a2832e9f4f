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

#ifndef CTX_KSB_HPP
#define CTX_KSB_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ctx/circuit.hpp"
#include "ctx/magic_square.hpp"
#include "ctx/noise.hpp"
#include "ctx/rng.hpp"

namespace ctx {

/// One measurement context: a row or column of the observable table,
/// probed in a random within-context order.
struct Context {
  bool is_row;
  int index;                 // 0..2
  std::array<int, 3> order;  // permutation of cell positions within the line

  /// The m-th measured cell as (row, col) table coordinates.
  std::pair<int, int> cell(int m) const {
    int pos = order[m];
    return is_row ? std::make_pair(index, pos) : std::make_pair(pos, index);
  }
};

struct ContextOutcome {
  Context ctx;
  std::array<int, 3> outcomes;  // eigenvalues in measured order
  int product;
  size_t position;              // index within the sequence
};

struct KsbSummary {
  std::array<double, 3> row_mean;
  std::array<double, 3> col_mean;
  double chi;
  double sigma;
};

enum class KsbInitialState { Zero, Plus, Bell };

std::vector<Context> random_context_sequence(size_t length, Rng& rng);

/// The full streamed circuit: 2 persistent data qubits + 1 recycled
/// ancilla, one QND fragment per cell measurement. signs[i][m] is the
/// post-processing sign of measurement m of context i; record keys are
/// "c<i>_<m>".
struct KsbCircuit {
  Circuit circuit{3};
  std::vector<Context> sequence;
  std::vector<std::array<int, 3>> signs;
};

KsbCircuit build_ksb_circuit(const std::vector<Context>& sequence,
                             KsbInitialState init = KsbInitialState::Zero);

std::vector<ContextOutcome> decode_ksb(const KsbCircuit& kc,
                                       const MeasurementRecord& rec);

/// One shot of the stream under the Pauli/readout noise model.
std::vector<ContextOutcome> run_ksb_shot(const KsbCircuit& kc,
                                         const NoiseParams& p,
                                         const MechanismToggles& toggles,
                                         Rng& rng);

/// chi = sum<R_i> - sum<C_i> with binomially propagated sigma.
KsbSummary chi_ksb(const std::vector<std::vector<ContextOutcome>>& shots);

struct NchvSearch {
  int max_chi;
  int min_chi;
  size_t count_max;
};

/// Exhaustive chi over the 512 deterministic +/-1 value tables.
NchvSearch nchv_bound_exhaustive();

struct PauliAgreement {
  int row;
  int col;
  size_t compatible_n = 0;
  size_t compatible_agree = 0;
  size_t incompatible_n = 0;
  size_t incompatible_agree = 0;

  double compatible_rate() const {
    return compatible_n ? double(compatible_agree) / double(compatible_n) : 0;
  }
  double incompatible_rate() const {
    return incompatible_n ? double(incompatible_agree) / double(incompatible_n)
                          : 0;
  }
};

/// For each table cell, agreement statistics between consecutive
/// occurrences, classified by whether every intervening measurement
/// commutes with it.
std::array<PauliAgreement, 9> p_agree_stats(
    const std::vector<std::vector<ContextOutcome>>& shots);

/// chi(delta) with a Z rotation of angle delta on the ancilla before its
/// final Hadamard in every QND fragment. Non-Clifford, so evaluated by
/// dense trajectories on 3 qubits; Pauli/readout noise optional.
std::vector<std::pair<double, double>> phase_error_sweep(
    const std::vector<double>& deltas, const std::vector<Context>& sequence,
    size_t shots, const NoiseParams& p, const MechanismToggles& toggles,
    uint64_t seed, KsbInitialState init = KsbInitialState::Zero);

}  // namespace ctx

#endif  // CTX_KSB_HPP
