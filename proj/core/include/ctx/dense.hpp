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

#ifndef CTX_DENSE_HPP
#define CTX_DENSE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "ctx/circuit.hpp"
#include "ctx/pauli.hpp"
#include "ctx/rng.hpp"

namespace ctx {

using Amp = std::complex<double>;
using Mat2 = std::array<Amp, 4>;  // row-major 2x2

/// One- or two-qubit Kraus channel.
struct KrausChannel {
  std::vector<Mat2> ops;

  /// sum K^dag K == I within tol.
  bool is_complete(double tol = 1e-9) const;

  static KrausChannel amplitude_damping(double gamma);
};

/// Small-N dense statevector / density-matrix simulator. Ground-truth
/// oracle for the tableau simulator and for the closed-form T1/DD
/// formulas. Pure states up to 14 qubits, density matrices up to 10.
class DenseState {
 public:
  static DenseState zero_pure(size_t num_qubits);
  static DenseState zero_density(size_t num_qubits);
  static DenseState ghz_pure(size_t num_qubits);
  static DenseState ghz_density(size_t num_qubits);

  size_t num_qubits() const { return n_; }
  bool is_density() const { return density_; }
  void promote_to_density();

  void apply(GateKind g, size_t q0, size_t q1 = SIZE_MAX);
  /// Arbitrary single-qubit unitary (e.g. the virtual-Z phase model).
  void apply_unitary1(size_t q, const Mat2& u);
  void apply_rz(size_t q, double angle);

  void apply_channel1(size_t q, const KrausChannel& ch);
  void apply_amplitude_damping(size_t q, double gamma);

  /// Repeated AmplitudeDamping-Y-AmplitudeDamping-Y cycles approximating a
  /// decoupled idle of duration t. Y pulses are instantaneous; each cycle
  /// covers dt of wall time split into two damping half-steps.
  void apply_dd_idle(size_t q, double t, double t1, double dt);

  /// <GHZ| rho |GHZ> (or |<GHZ|psi>|^2 for pure states).
  double fidelity_to_ghz() const;

  double pauli_expectation(const PauliString& p) const;

  /// Z-basis probability of each bitstring (little-endian: bit q of the
  /// index is qubit q).
  std::vector<double> probabilities() const;
  std::vector<uint8_t> sample_measurement(Rng& rng) const;

  /// Projective Z measurement with collapse (pure or density).
  int measure_qubit(size_t q, Rng& rng);
  void reset_qubit(size_t q, Rng& rng);

  double trace() const;

  const std::vector<Amp>& data() const { return v_; }

 private:
  DenseState(size_t n, bool density);
  size_t dim() const { return size_t{1} << n_; }
  // Applies u to the ket (side=0) or conj(u) to the bra (side=1) index.
  void apply_mat1_side(size_t q, const Mat2& u, int side);
  void apply_two_qubit_side(GateKind g, size_t q0, size_t q1, int side);
  double prob_of_one(size_t q) const;

  size_t n_;
  bool density_;
  std::vector<Amp> v_;  // amplitudes, or row-major density matrix
};

/// Executes a Clifford circuit (with measurements/resets as trajectory
/// collapses) on a dense state.
MeasurementRecord run_circuit_dense(DenseState& s, const Circuit& c,
                                    Rng& rng);

}  // namespace ctx

#endif  // CTX_DENSE_HPP
