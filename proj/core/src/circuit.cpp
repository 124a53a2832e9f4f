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

#include "ctx/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ctx {

Circuit::Circuit(size_t num_qubits)
    : num_qubits_(num_qubits), last_moment_(num_qubits, -1) {
  if (num_qubits == 0) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

void Circuit::check_target(size_t q) const {
  if (q >= num_qubits_) throw std::out_of_range("qubit index out of range");
}

int Circuit::schedule(size_t q0, size_t q1) {
  int m = barrier_moment_;
  m = std::max(m, last_moment_[q0] + 1);
  if (q1 != kNoTarget) m = std::max(m, last_moment_[q1] + 1);
  last_moment_[q0] = m;
  if (q1 != kNoTarget) last_moment_[q1] = m;
  return m;
}

void Circuit::append(GateKind g, size_t q0) {
  if (is_two_qubit(g)) {
    throw std::invalid_argument("two-qubit gate needs two targets");
  }
  if (g == GateKind::MEASURE_Z) {
    measure(q0, "m" + std::to_string(record_keys_.size()));
    return;
  }
  check_target(q0);
  ops_.push_back({g, static_cast<uint32_t>(q0), kNoTarget,
                  schedule(q0, kNoTarget), -1});
}

void Circuit::append(GateKind g, size_t q0, size_t q1) {
  if (!is_two_qubit(g)) {
    throw std::invalid_argument("single-qubit op given two targets");
  }
  check_target(q0);
  check_target(q1);
  if (q0 == q1) throw std::invalid_argument("two-qubit gate targets coincide");
  ops_.push_back({g, static_cast<uint32_t>(q0), static_cast<uint32_t>(q1),
                  schedule(q0, q1), -1});
}

void Circuit::measure(size_t q, const std::string& key) {
  check_target(q);
  if (record_lookup_.count(key)) {
    throw std::invalid_argument("duplicate measurement record key: " + key);
  }
  int32_t rec = static_cast<int32_t>(record_keys_.size());
  record_lookup_.emplace(key, record_keys_.size());
  record_keys_.push_back(key);
  ops_.push_back({GateKind::MEASURE_Z, static_cast<uint32_t>(q), kNoTarget,
                  schedule(q, kNoTarget), rec});
}

void Circuit::reset(size_t q) {
  check_target(q);
  ops_.push_back({GateKind::RESET, static_cast<uint32_t>(q), kNoTarget,
                  schedule(q, kNoTarget), -1});
}

void Circuit::append_circuit(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("circuit width mismatch");
  }
  for (const Operation& op : other.ops_) {
    switch (op.gate) {
      case GateKind::MEASURE_Z:
        measure(op.q0, other.record_keys_[static_cast<size_t>(op.record)]);
        break;
      case GateKind::RESET:
        reset(op.q0);
        break;
      default:
        if (is_two_qubit(op.gate)) {
          append(op.gate, op.q0, op.q1);
        } else {
          append(op.gate, op.q0);
        }
    }
  }
}

void Circuit::barrier() { barrier_moment_ = num_moments(); }

size_t Circuit::record_index(const std::string& key) const {
  auto it = record_lookup_.find(key);
  if (it == record_lookup_.end()) {
    throw std::out_of_range("unknown record key: " + key);
  }
  return it->second;
}

int Circuit::num_moments() const {
  int m = 0;
  for (const Operation& op : ops_) m = std::max(m, op.moment + 1);
  return m;
}

int Circuit::two_qubit_moment_count() const {
  std::set<int32_t> moments;
  for (const Operation& op : ops_) {
    if (is_two_qubit(op.gate)) moments.insert(op.moment);
  }
  return static_cast<int>(moments.size());
}

size_t Circuit::count_gates(GateKind g) const {
  size_t c = 0;
  for (const Operation& op : ops_) c += op.gate == g;
  return c;
}

size_t Circuit::count_single_qubit_gates() const {
  size_t c = 0;
  for (const Operation& op : ops_) {
    c += is_unitary(op.gate) && !is_two_qubit(op.gate);
  }
  return c;
}

size_t Circuit::count_two_qubit_gates() const {
  size_t c = 0;
  for (const Operation& op : ops_) c += is_two_qubit(op.gate);
  return c;
}

}  // namespace ctx
