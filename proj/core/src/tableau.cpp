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

#include "ctx/tableau.hpp"

#include <stdexcept>

namespace ctx {

StabilizerTableau::StabilizerTableau(size_t num_qubits) : n_(num_qubits) {
  if (num_qubits == 0) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
  stab_.reserve(n_);
  destab_.reserve(n_);
  for (size_t i = 0; i < n_; ++i) {
    stab_.push_back(PauliString::single(n_, i, 'Z'));
    destab_.push_back(PauliString::single(n_, i, 'X'));
  }
}

void StabilizerTableau::apply(GateKind g, size_t q0, size_t q1) {
  if (!is_unitary(g)) {
    throw std::invalid_argument("apply() takes unitary gates only");
  }
  if (q0 >= n_ || (is_two_qubit(g) && q1 >= n_)) {
    throw std::out_of_range("gate target out of range");
  }
  for (size_t i = 0; i < n_; ++i) {
    stab_[i].conjugate_by(g, q0, q1);
    destab_[i].conjugate_by(g, q0, q1);
  }
}

int StabilizerTableau::pauli_expectation(const PauliString& p) const {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("Pauli size mismatch");
  }
  for (const PauliString& s : stab_) {
    if (!p.commutes_with(s)) return 0;
  }
  // p commutes with every stabilizer, so it is in the group mod phase.
  // Reconstruct it from generators selected by destabilizer pairing.
  PauliString acc(n_);
  for (size_t i = 0; i < n_; ++i) {
    if (!p.commutes_with(destab_[i])) acc.mul(stab_[i]);
  }
  if (!acc.bits_equal(p)) {
    throw std::logic_error("tableau rows do not span the Pauli group");
  }
  int diff = (acc.xz_phase_exponent() - p.xz_phase_exponent() + 4) & 3;
  if (diff == 0) return +1;
  if (diff == 2) return -1;
  throw std::logic_error("non-Hermitian phase in expectation");
}

bool StabilizerTableau::z_is_determined(size_t q) const {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  for (const PauliString& s : stab_) {
    if (s.x_bit(q)) return false;
  }
  return true;
}

int StabilizerTableau::measure_z(size_t q, Rng& rng) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  size_t pivot = n_;
  for (size_t i = 0; i < n_; ++i) {
    if (stab_[i].x_bit(q)) {
      pivot = i;
      break;
    }
  }
  if (pivot == n_) {
    // Deterministic: Z_q is a product of stabilizer rows, selected by which
    // destabilizers anticommute with it (have an X at q).
    PauliString acc(n_);
    for (size_t i = 0; i < n_; ++i) {
      if (destab_[i].x_bit(q)) acc.mul(stab_[i]);
    }
    return acc.sign_int() < 0 ? 1 : 0;
  }

  PauliString old = stab_[pivot];
  for (size_t i = 0; i < n_; ++i) {
    if (i != pivot && stab_[i].x_bit(q)) stab_[i].mul(old);
    if (i != pivot && destab_[i].x_bit(q)) destab_[i].mul(old);
  }
  int bit = random_bit(rng) ? 1 : 0;
  destab_[pivot] = std::move(old);
  stab_[pivot] = PauliString::single(n_, q, 'Z', bit ? -1 : +1);
  return bit;
}

void StabilizerTableau::reset(size_t q, Rng& rng) {
  if (measure_z(q, rng) == 1) apply(GateKind::X, q);
}

void StabilizerTableau::apply_pauli_error(const PauliString& p) {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("Pauli size mismatch");
  }
  for (size_t i = 0; i < n_; ++i) {
    if (!stab_[i].commutes_with(p)) stab_[i].negate();
    if (!destab_[i].commutes_with(p)) destab_[i].negate();
  }
}

bool StabilizerTableau::check_invariants() const {
  for (size_t i = 0; i < n_; ++i) {
    int e = stab_[i].sign_exponent();
    if (e != 0 && e != 2) return false;
    for (size_t j = i + 1; j < n_; ++j) {
      if (!stab_[i].commutes_with(stab_[j])) return false;
    }
    for (size_t j = 0; j < n_; ++j) {
      bool anticommute = !destab_[i].commutes_with(stab_[j]);
      if (anticommute != (i == j)) return false;
    }
  }
  // The destabilizer pairing certifies linear independence of the
  // stabilizer rows: a dependent row would commute-pair inconsistently.
  return true;
}

MeasurementRecord run_circuit(StabilizerTableau& t, const Circuit& c,
                              Rng& rng) {
  if (t.num_qubits() != c.num_qubits()) {
    throw std::invalid_argument("circuit width does not match tableau");
  }
  MeasurementRecord rec(c.num_measurements());
  for (const Operation& op : c.ops()) {
    switch (op.gate) {
      case GateKind::MEASURE_Z:
        rec[static_cast<size_t>(op.record)] =
            static_cast<uint8_t>(t.measure_z(op.q0, rng));
        break;
      case GateKind::RESET:
        t.reset(op.q0, rng);
        break;
      default:
        t.apply(op.gate, op.q0, op.q1);
    }
  }
  return rec;
}

}  // namespace ctx
