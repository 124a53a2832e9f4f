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

#ifndef CTX_CIRCUIT_HPP
#define CTX_CIRCUIT_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctx/gates.hpp"

namespace ctx {

struct Operation {
  GateKind gate;
  uint32_t q0;
  uint32_t q1;        // SIZE-like sentinel UINT32_MAX for single-qubit ops
  int32_t moment;
  int32_t record;     // measurement record index, -1 otherwise
};

/// Ordered, moment-scheduled list of gates/measurements/resets. Moments are
/// assigned greedily on append: an op lands in the earliest moment at or
/// after the current barrier in which all its targets are free.
class Circuit {
 public:
  static constexpr uint32_t kNoTarget = UINT32_MAX;

  explicit Circuit(size_t num_qubits);

  size_t num_qubits() const { return num_qubits_; }

  void append(GateKind g, size_t q0);
  void append(GateKind g, size_t q0, size_t q1);
  /// MEASURE_Z with an explicit record key.
  void measure(size_t q, const std::string& key);
  void reset(size_t q);
  /// Appends every op of `other` (same width), scheduling after this
  /// circuit's current moments.
  void append_circuit(const Circuit& other);

  /// Forces subsequent ops into strictly later moments than anything
  /// appended so far.
  void barrier();

  const std::vector<Operation>& ops() const { return ops_; }
  size_t num_measurements() const { return record_keys_.size(); }
  const std::string& record_key(size_t index) const {
    return record_keys_[index];
  }
  /// Record index for a key; throws if unknown.
  size_t record_index(const std::string& key) const;

  int num_moments() const;
  /// Number of distinct moments containing at least one two-qubit gate.
  int two_qubit_moment_count() const;
  size_t count_gates(GateKind g) const;
  size_t count_single_qubit_gates() const;
  size_t count_two_qubit_gates() const;

 private:
  int schedule(size_t q0, size_t q1);
  void check_target(size_t q) const;

  size_t num_qubits_;
  std::vector<Operation> ops_;
  std::vector<int> last_moment_;  // per qubit, -1 if untouched
  int barrier_moment_ = 0;
  std::vector<std::string> record_keys_;
  std::unordered_map<std::string, size_t> record_lookup_;
};

/// Per-shot measurement results, indexed in record order.
class MeasurementRecord {
 public:
  MeasurementRecord() = default;
  explicit MeasurementRecord(size_t num_records) : bits_(num_records, 0) {}

  uint8_t& operator[](size_t index) { return bits_[index]; }
  uint8_t operator[](size_t index) const { return bits_[index]; }
  size_t size() const { return bits_.size(); }
  const std::vector<uint8_t>& bits() const { return bits_; }

 private:
  std::vector<uint8_t> bits_;
};

}  // namespace ctx

#endif  // CTX_CIRCUIT_HPP
