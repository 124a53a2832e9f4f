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

#ifndef CTX_PAULI_MEASUREMENT_HPP
#define CTX_PAULI_MEASUREMENT_HPP

#include <array>
#include <string>

#include "ctx/circuit.hpp"
#include "ctx/pauli.hpp"

namespace ctx {

/// After the compiled rotation, measuring Z on `qubit` yields the original
/// operator's eigenvalue as sign * (-1)^bit.
struct PauliReadout {
  size_t qubit;
  int sign;
};

/// Appends the Clifford rotation mapping p onto +/-Z of a single qubit.
/// The caller appends the Z measurement. p must be Hermitian (+/-1 sign)
/// and non-identity.
PauliReadout append_single_pauli_readout(Circuit& c, const PauliString& p);

/// Simultaneous readout of two commuting, independent two-or-fewer-weight
/// Paulis: compiles a common-eigenbasis rotation, returns the readout slot
/// for each input in order.
std::array<PauliReadout, 2> append_pair_readout(Circuit& c,
                                                const PauliString& p1,
                                                const PauliString& p2);

/// Ancilla-mediated quantum-non-demolition measurement of p: H on the
/// ancilla, a controlled version of each support site, H, measure, reset.
/// Returns the sign to fold into the recorded bit (eigenvalue equals
/// sign * (-1)^bit). The data register is untouched apart from the
/// projection onto a p eigenspace.
int append_qnd_measurement(Circuit& c, const PauliString& p, size_t ancilla,
                           const std::string& key);

}  // namespace ctx

#endif  // CTX_PAULI_MEASUREMENT_HPP
