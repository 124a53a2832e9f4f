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

#ifndef CTX_NOISE_HPP
#define CTX_NOISE_HPP

#include <optional>
#include <vector>

#include "ctx/circuit.hpp"
#include "ctx/pauli.hpp"
#include "ctx/rng.hpp"
#include "ctx/tableau.hpp"

namespace ctx {

/// Stochastic Pauli + readout noise parameters.
///
/// Idle-time T1 decay is deliberately absent from the Monte-Carlo path:
/// amplitude damping is not a Pauli channel, so idle decay enters either
/// through the dense oracle (small systems) or through the closed-form
/// fidelity budget (any size).
struct NoiseParams {
  double e_p_sq = 0.0;  // Pauli error after each single-qubit gate
  double e_p_2q = 0.0;  // joint Pauli error after each two-qubit gate
  double e0 = 0.0;      // P(report 1 | prepared 0)
  double e1 = 0.0;      // P(report 0 | prepared 1)
  double t1 = 0.0;      // microseconds; used by dense/analytic paths only
  double moment_duration_ns = 42.0;

  void set_symmetric_readout(double epsilon) {
    e0 = epsilon;
    e1 = epsilon;
  }

  bool valid() const;
};

/// Per-mechanism switches for attributing fidelity loss.
struct MechanismToggles {
  bool sq = true;
  bool twoq = true;
  bool readout = true;

  static MechanismToggles all() { return {true, true, true}; }
  static MechanismToggles none() { return {false, false, false}; }
  static MechanismToggles only_sq() { return {true, false, false}; }
  static MechanismToggles only_2q() { return {false, true, false}; }
  static MechanismToggles only_readout() { return {false, false, true}; }
};

struct ErrorEvent {
  size_t op_index;
  int32_t moment;
  PauliString error;
};

/// With probability e, a uniform X/Y/Z on qubit q of an n-qubit register.
std::optional<PauliString> sample_sq_error(size_t num_qubits, size_t q,
                                           double e, Rng& rng);

/// With probability e, one of the 15 non-identity two-qubit Paulis
/// (uniform) on (q0, q1) of an n-qubit register.
std::optional<PauliString> sample_2q_error(size_t num_qubits, size_t q0,
                                           size_t q1, double e, Rng& rng);

int flip_readout(int bit, double e0, double e1, Rng& rng);

/// One noisy shot: runs c on a fresh tableau, injecting a sampled Pauli
/// after every unitary gate and flipping each measurement record.
/// `events`, if given, receives the injected errors in op order.
MeasurementRecord run_noisy(const Circuit& c, const NoiseParams& p,
                            const MechanismToggles& toggles, Rng& rng,
                            std::vector<ErrorEvent>* events = nullptr);

inline MeasurementRecord run_noisy(const Circuit& c, const NoiseParams& p,
                                   Rng& rng) {
  return run_noisy(c, p, MechanismToggles::all(), rng);
}

}  // namespace ctx

#endif  // CTX_NOISE_HPP
