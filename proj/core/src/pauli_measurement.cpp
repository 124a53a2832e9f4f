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

#include "ctx/pauli_measurement.hpp"

#include <stdexcept>
#include <vector>

namespace ctx {

namespace {

/// Appends gates while conjugating tracked Pauli copies, so readout signs
/// fall out mechanically instead of by case analysis.
class Rotator {
 public:
  Rotator(Circuit& c, std::vector<PauliString*> tracked)
      : c_(c), tracked_(std::move(tracked)) {}

  void g1(GateKind g, size_t q) {
    c_.append(g, q);
    for (PauliString* p : tracked_) p->conjugate_by(g, q);
  }
  void g2(GateKind g, size_t a, size_t b) {
    c_.append(g, a, b);
    for (PauliString* p : tracked_) p->conjugate_by(g, a, b);
  }

  /// Local rotation taking site q of `target` into {I, Z}.
  void reduce_site(const PauliString& target, size_t q) {
    char site = target.pauli_at(q);
    if (site == 'Y') g1(GateKind::S_DAG, q);
    if (site == 'Y' || site == 'X') g1(GateKind::H, q);
  }

  /// CNOT-chains a set of Z sites down to the last one.
  size_t collapse_z_sites(const std::vector<size_t>& sites) {
    for (size_t i = 0; i + 1 < sites.size(); ++i) {
      g2(GateKind::CNOT, sites[i], sites[i + 1]);
    }
    return sites.back();
  }

 private:
  Circuit& c_;
  std::vector<PauliString*> tracked_;
};

std::vector<size_t> support(const PauliString& p) {
  std::vector<size_t> s;
  for (size_t q = 0; q < p.num_qubits(); ++q) {
    if (p.pauli_at(q) != 'I') s.push_back(q);
  }
  return s;
}

void check_measurable(const PauliString& p) {
  if (p.is_identity_bits()) {
    throw std::invalid_argument("cannot compile identity readout");
  }
  p.sign_int();  // throws on imaginary phase
}

/// Rotates p onto +/-Z of one qubit via rot; p is updated in place.
size_t diagonalize(Rotator& rot, PauliString& p) {
  std::vector<size_t> sites = support(p);
  for (size_t q : sites) rot.reduce_site(p, q);
  return rot.collapse_z_sites(sites);
}

}  // namespace

PauliReadout append_single_pauli_readout(Circuit& c, const PauliString& p) {
  check_measurable(p);
  PauliString work = p;
  Rotator rot(c, {&work});
  size_t u = diagonalize(rot, work);
  if (work.weight() != 1 || work.pauli_at(u) != 'Z') {
    throw std::logic_error("readout compilation failed to reach Z");
  }
  return {u, work.sign_int()};
}

std::array<PauliReadout, 2> append_pair_readout(Circuit& c,
                                                const PauliString& p1,
                                                const PauliString& p2) {
  check_measurable(p1);
  check_measurable(p2);
  if (!p1.commutes_with(p2)) {
    throw std::invalid_argument("pair readout needs commuting operators");
  }
  if (p1.bits_equal(p2)) {
    throw std::invalid_argument("pair readout needs independent operators");
  }
  PauliString w1 = p1;
  PauliString w2 = p2;
  Rotator rot(c, {&w1, &w2});

  size_t u = diagonalize(rot, w1);

  // w2 commutes with Z_u, so its u site is I or Z and every other site can
  // be rotated locally without disturbing w1.
  std::vector<size_t> other;
  for (size_t q : support(w2)) {
    if (q == u) continue;
    rot.reduce_site(w2, q);
    other.push_back(q);
  }
  if (other.empty()) {
    throw std::invalid_argument("pair readout needs independent operators");
  }
  size_t v = rot.collapse_z_sites(other);
  if (w2.z_bit(u)) rot.g2(GateKind::CNOT, u, v);

  if (w1.weight() != 1 || w1.pauli_at(u) != 'Z' || w2.weight() != 1 ||
      w2.pauli_at(v) != 'Z') {
    throw std::logic_error("pair readout compilation failed to reach Z");
  }
  return {PauliReadout{u, w1.sign_int()}, PauliReadout{v, w2.sign_int()}};
}

int append_qnd_measurement(Circuit& c, const PauliString& p, size_t ancilla,
                           const std::string& key) {
  check_measurable(p);
  if (p.pauli_at(ancilla) != 'I') {
    throw std::invalid_argument("ancilla overlaps measured operator");
  }
  c.append(GateKind::H, ancilla);
  for (size_t q : support(p)) {
    switch (p.pauli_at(q)) {
      case 'X':
        c.append(GateKind::CNOT, ancilla, q);
        break;
      case 'Z':
        c.append(GateKind::CZ, ancilla, q);
        break;
      case 'Y':
        // controlled-Y as S_t CX S_t^dag conjugation.
        c.append(GateKind::S_DAG, q);
        c.append(GateKind::CNOT, ancilla, q);
        c.append(GateKind::S, q);
        break;
      default:
        break;
    }
  }
  c.append(GateKind::H, ancilla);
  c.measure(ancilla, key);
  c.reset(ancilla);
  return p.sign_int();
}

}  // namespace ctx
