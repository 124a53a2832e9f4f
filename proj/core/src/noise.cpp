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

#include "ctx/noise.hpp"

#include <stdexcept>

namespace ctx {

namespace {

bool prob_ok(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

bool NoiseParams::valid() const {
  return prob_ok(e_p_sq) && prob_ok(e_p_2q) && prob_ok(e0) && prob_ok(e1) &&
         t1 >= 0.0 && moment_duration_ns > 0.0;
}

std::optional<PauliString> sample_sq_error(size_t num_qubits, size_t q,
                                           double e, Rng& rng) {
  if (!prob_ok(e)) throw std::invalid_argument("error rate outside [0, 1]");
  if (e == 0.0 || random_unit(rng) >= e) return std::nullopt;
  static const char kPaulis[3] = {'X', 'Y', 'Z'};
  size_t pick = std::uniform_int_distribution<size_t>(0, 2)(rng);
  return PauliString::single(num_qubits, q, kPaulis[pick]);
}

std::optional<PauliString> sample_2q_error(size_t num_qubits, size_t q0,
                                           size_t q1, double e, Rng& rng) {
  if (!prob_ok(e)) throw std::invalid_argument("error rate outside [0, 1]");
  if (e == 0.0 || random_unit(rng) >= e) return std::nullopt;
  // pick in [1, 15] encodes (x0, z0, x1, z1) != 0.
  size_t pick = std::uniform_int_distribution<size_t>(1, 15)(rng);
  PauliString p(num_qubits);
  p.set_x(q0, pick & 1);
  p.set_z(q0, (pick >> 1) & 1);
  p.set_x(q1, (pick >> 2) & 1);
  p.set_z(q1, (pick >> 3) & 1);
  return p;
}

int flip_readout(int bit, double e0, double e1, Rng& rng) {
  if (!prob_ok(e0) || !prob_ok(e1)) {
    throw std::invalid_argument("readout error rate outside [0, 1]");
  }
  double e = bit ? e1 : e0;
  if (e > 0.0 && random_unit(rng) < e) return 1 - bit;
  return bit;
}

MeasurementRecord run_noisy(const Circuit& c, const NoiseParams& p,
                            const MechanismToggles& toggles, Rng& rng,
                            std::vector<ErrorEvent>* events) {
  if (!p.valid()) throw std::invalid_argument("invalid noise parameters");
  StabilizerTableau t(c.num_qubits());
  MeasurementRecord rec(c.num_measurements());
  const auto& ops = c.ops();
  for (size_t i = 0; i < ops.size(); ++i) {
    const Operation& op = ops[i];
    switch (op.gate) {
      case GateKind::MEASURE_Z: {
        int bit = t.measure_z(op.q0, rng);
        if (toggles.readout) bit = flip_readout(bit, p.e0, p.e1, rng);
        rec[static_cast<size_t>(op.record)] = static_cast<uint8_t>(bit);
        break;
      }
      case GateKind::RESET:
        t.reset(op.q0, rng);
        break;
      default: {
        t.apply(op.gate, op.q0, op.q1);
        std::optional<PauliString> err;
        if (is_two_qubit(op.gate)) {
          if (toggles.twoq) {
            err = sample_2q_error(c.num_qubits(), op.q0, op.q1, p.e_p_2q, rng);
          }
        } else if (toggles.sq) {
          err = sample_sq_error(c.num_qubits(), op.q0, p.e_p_sq, rng);
        }
        if (err) {
          t.apply_pauli_error(*err);
          if (events) events->push_back({i, op.moment, std::move(*err)});
        }
      }
    }
  }
  return rec;
}

}  // namespace ctx
