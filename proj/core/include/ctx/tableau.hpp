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

#ifndef CTX_TABLEAU_HPP
#define CTX_TABLEAU_HPP

#include <cstddef>
#include <vector>

#include "ctx/circuit.hpp"
#include "ctx/pauli.hpp"
#include "ctx/rng.hpp"

namespace ctx {

/// Stabilizer-tableau simulator in the full 2n-row form (n stabilizer rows
/// plus n destabilizer rows), so a Z measurement is O(n^2) worst case and
/// deterministic-vs-random can be decided in O(n).
///
/// A tableau is a mutable value owned by one execution context at a time.
/// Shot-level parallelism clones the post-preparation tableau or re-runs
/// the circuit with independent random streams.
class StabilizerTableau {
 public:
  /// |0...0>: stabilizers +Z_i, destabilizers +X_i. n must be >= 1.
  explicit StabilizerTableau(size_t num_qubits);

  size_t num_qubits() const { return n_; }

  void apply(GateKind g, size_t q0, size_t q1 = SIZE_MAX);

  /// +1/-1 if +/-p is in the stabilizer group, 0 if p anticommutes with
  /// some stabilizer row (indeterminate outcome).
  int pauli_expectation(const PauliString& p) const;

  /// Z-basis measurement with collapse. Deterministic outcomes leave the
  /// state unchanged; random ones collapse it so an immediate repeat
  /// returns the same bit.
  int measure_z(size_t q, Rng& rng);

  /// Whether measure_z(q) would be deterministic.
  bool z_is_determined(size_t q) const;

  /// Measure-and-flip-to-|0>.
  void reset(size_t q, Rng& rng);

  /// Conjugates row signs only; applying the same p twice is the identity.
  void apply_pauli_error(const PauliString& p);

  const PauliString& stabilizer(size_t i) const { return stab_[i]; }
  const PauliString& destabilizer(size_t i) const { return destab_[i]; }

  /// Pairwise commutation of stabilizers, destabilizer pairing, and +/-1
  /// row signs. Used by tests after randomized op sequences.
  bool check_invariants() const;

 private:
  size_t n_;
  std::vector<PauliString> stab_;
  std::vector<PauliString> destab_;
};

/// Executes c on t, recording measurement bits per record index.
MeasurementRecord run_circuit(StabilizerTableau& t, const Circuit& c,
                              Rng& rng);

}  // namespace ctx

#endif  // CTX_TABLEAU_HPP
