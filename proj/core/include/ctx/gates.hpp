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

#ifndef CTX_GATES_HPP
#define CTX_GATES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ctx {

/// Fixed gate vocabulary. Arbitrary Cliffords must be compiled to it by
/// callers.
enum class GateKind : uint8_t {
  H,
  S,
  S_DAG,
  X,
  Y,
  Z,
  SQRT_X,
  CZ,
  CNOT,
  MEASURE_Z,
  RESET,
};

constexpr bool is_two_qubit(GateKind g) {
  return g == GateKind::CZ || g == GateKind::CNOT;
}

constexpr bool is_unitary(GateKind g) {
  return g != GateKind::MEASURE_Z && g != GateKind::RESET;
}

constexpr std::string_view gate_name(GateKind g) {
  switch (g) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::S_DAG: return "S_DAG";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::SQRT_X: return "SQRT_X";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::MEASURE_Z: return "M";
    case GateKind::RESET: return "R";
  }
  return "?";
}

}  // namespace ctx

#endif  // CTX_GATES_HPP
