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

#include "ctx/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ctx {

namespace {

size_t words_for(size_t n) { return (n + 63) / 64; }

size_t popcount_and(const std::vector<uint64_t>& a,
                    const std::vector<uint64_t>& b) {
  size_t c = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    c += static_cast<size_t>(std::popcount(a[i] & b[i]));
  }
  return c;
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : n_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {}

PauliString PauliString::from_str(std::string_view s) {
  int sign_exp = 0;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') sign_exp = 2;
    s.remove_prefix(1);
  }
  if (!s.empty() && s.front() == 'i') {
    sign_exp = (sign_exp + 1) & 3;
    s.remove_prefix(1);
  }
  if (s.empty()) {
    throw std::invalid_argument("Pauli string needs at least one site");
  }
  PauliString p(s.size());
  size_t num_y = 0;
  for (size_t q = 0; q < s.size(); ++q) {
    switch (s[q]) {
      case 'I': case '_': break;
      case 'X': p.set_x(q, true); break;
      case 'Z': p.set_z(q, true); break;
      case 'Y':
        p.set_x(q, true);
        p.set_z(q, true);
        ++num_y;
        break;
      default:
        throw std::invalid_argument("bad Pauli character in string");
    }
  }
  p.phase_ = static_cast<uint8_t>((sign_exp + num_y) & 3);
  return p;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char p, int sign) {
  if (q >= num_qubits) throw std::out_of_range("qubit index out of range");
  PauliString out(num_qubits);
  int num_y = 0;
  switch (p) {
    case 'X': out.set_x(q, true); break;
    case 'Z': out.set_z(q, true); break;
    case 'Y':
      out.set_x(q, true);
      out.set_z(q, true);
      num_y = 1;
      break;
    default:
      throw std::invalid_argument("single() expects X, Y or Z");
  }
  int sign_exp = sign < 0 ? 2 : 0;
  out.phase_ = static_cast<uint8_t>((sign_exp + num_y) & 3);
  return out;
}

char PauliString::pauli_at(size_t q) const {
  bool x = x_bit(q), z = z_bit(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

size_t PauliString::weight() const {
  size_t w = 0;
  for (size_t i = 0; i < x_.size(); ++i) {
    w += static_cast<size_t>(std::popcount(x_[i] | z_[i]));
  }
  return w;
}

bool PauliString::is_identity_bits() const {
  for (size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] | z_[i]) return false;
  }
  return true;
}

int PauliString::sign_exponent() const {
  size_t num_y = popcount_and(x_, z_);
  return static_cast<int>((phase_ + 4 - (num_y & 3)) & 3);
}

std::complex<double> PauliString::sign() const {
  switch (sign_exponent()) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int PauliString::sign_int() const {
  int e = sign_exponent();
  if (e == 0) return +1;
  if (e == 2) return -1;
  throw std::logic_error("Pauli sign is imaginary, not +/-1");
}

void PauliString::set_sign(int sign) {
  size_t num_y = popcount_and(x_, z_);
  int sign_exp = sign < 0 ? 2 : 0;
  phase_ = static_cast<uint8_t>((sign_exp + (num_y & 3)) & 3);
}

void PauliString::mul(const PauliString& rhs) {
  check_same_size(rhs);
  // (i^a X^x1 Z^z1)(i^b X^x2 Z^z2): moving X^x2 left across Z^z1 picks up
  // (-1)^{z1.x2}.
  size_t cross = popcount_and(z_, rhs.x_);
  phase_ = static_cast<uint8_t>((phase_ + rhs.phase_ + 2 * (cross & 1)) & 3);
  for (size_t i = 0; i < x_.size(); ++i) {
    x_[i] ^= rhs.x_[i];
    z_[i] ^= rhs.z_[i];
  }
}

bool PauliString::commutes_with(const PauliString& rhs) const {
  check_same_size(rhs);
  size_t a = popcount_and(x_, rhs.z_);
  size_t b = popcount_and(z_, rhs.x_);
  return ((a + b) & 1) == 0;
}

bool PauliString::bits_equal(const PauliString& rhs) const {
  return n_ == rhs.n_ && x_ == rhs.x_ && z_ == rhs.z_;
}

bool PauliString::operator==(const PauliString& rhs) const {
  return bits_equal(rhs) && phase_ == rhs.phase_;
}

void PauliString::conjugate_by(GateKind g, size_t q0, size_t q1) {
  if (q0 >= n_ || (is_two_qubit(g) && (q1 >= n_ || q1 == q0))) {
    throw std::out_of_range("gate target out of range");
  }
  bool x0 = x_bit(q0), z0 = z_bit(q0);
  switch (g) {
    case GateKind::H:
      if (x0 && z0) phase_ = (phase_ + 2) & 3;
      set_x(q0, z0);
      set_z(q0, x0);
      break;
    case GateKind::S:
      if (x0) {
        phase_ = (phase_ + 1) & 3;
        set_z(q0, !z0);
      }
      break;
    case GateKind::S_DAG:
      if (x0) {
        phase_ = (phase_ + 3) & 3;
        set_z(q0, !z0);
      }
      break;
    case GateKind::X:
      if (z0) phase_ = (phase_ + 2) & 3;
      break;
    case GateKind::Y:
      if (x0 != z0) phase_ = (phase_ + 2) & 3;
      break;
    case GateKind::Z:
      if (x0) phase_ = (phase_ + 2) & 3;
      break;
    case GateKind::SQRT_X:
      if (z0) {
        phase_ = (phase_ + 3) & 3;
        set_x(q0, !x0);
      }
      break;
    case GateKind::CZ: {
      bool x1 = x_bit(q1);
      if (x0 && x1) phase_ = (phase_ + 2) & 3;
      set_z(q0, z_bit(q0) ^ x1);
      set_z(q1, z_bit(q1) ^ x0);
      break;
    }
    case GateKind::CNOT:
      set_x(q1, x_bit(q1) ^ x0);
      set_z(q0, z_bit(q0) ^ z_bit(q1));
      break;
    default:
      throw std::invalid_argument("cannot conjugate by a non-unitary op");
  }
}

std::string PauliString::str() const {
  std::string out;
  switch (sign_exponent()) {
    case 0: out = "+"; break;
    case 1: out = "+i"; break;
    case 2: out = "-"; break;
    default: out = "-i"; break;
  }
  for (size_t q = 0; q < n_; ++q) out += pauli_at(q);
  return out;
}

void PauliString::check_same_size(const PauliString& rhs) const {
  if (n_ != rhs.n_) {
    throw std::invalid_argument("Pauli size mismatch");
  }
}

}  // namespace ctx
