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

#ifndef CTX_PAULI_HPP
#define CTX_PAULI_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ctx/gates.hpp"

namespace ctx {

/// An n-qubit Pauli operator with phase, stored as machine-word-packed x/z
/// bit-vectors.
///
/// Internal convention: the operator is i^k * prod_q X_q^{x_q} Z_q^{z_q}.
/// A qubit with both bits set is a Y site (Y = i X Z), so the conventional
/// sign of the operator written as (phase) * tensor of {I,X,Y,Z} is
/// i^{k - #Y}. The XZ convention keeps gate conjugation and the group law
/// free of per-qubit case analysis.
class PauliString {
 public:
  PauliString() = default;
  /// Identity on n qubits.
  explicit PauliString(size_t num_qubits);

  /// Parses "XIZ", "+XX", "-YY", "iZ", "-iXY". Characters outside
  /// {I,X,Y,Z} and a leading sign are rejected.
  static PauliString from_str(std::string_view s);

  /// Weight-1 Pauli `p` in {'X','Y','Z'} at qubit q, with sign +1 or -1.
  static PauliString single(size_t num_qubits, size_t q, char p,
                            int sign = +1);

  size_t num_qubits() const { return n_; }

  bool x_bit(size_t q) const { return bit(x_, q); }
  bool z_bit(size_t q) const { return bit(z_, q); }
  void set_x(size_t q, bool v) { set_bit(x_, q, v); }
  void set_z(size_t q, bool v) { set_bit(z_, q, v); }

  /// 'I', 'X', 'Y' or 'Z'.
  char pauli_at(size_t q) const;

  size_t weight() const;
  bool is_identity_bits() const;

  /// Exponent k of the internal i^k phase (XZ convention).
  int xz_phase_exponent() const { return phase_; }

  /// Exponent of i in the conventional sign, i.e. the operator equals
  /// i^{sign_exponent} * tensor of {I,X,Y,Z}.
  int sign_exponent() const;
  std::complex<double> sign() const;
  /// Conventional sign as +1/-1; throws if the phase is imaginary.
  int sign_int() const;
  void set_sign(int sign);
  void negate() { phase_ = (phase_ + 2) & 3; }

  /// Group law: this <- this * rhs, phases composed with (+/-1, +/-i)
  /// bookkeeping.
  void mul(const PauliString& rhs);

  bool commutes_with(const PauliString& rhs) const;

  /// Same x/z bits, phase ignored.
  bool bits_equal(const PauliString& rhs) const;

  bool operator==(const PauliString& rhs) const;

  /// Conjugate in place by a unitary gate from the vocabulary:
  /// P -> G P G^dagger.
  void conjugate_by(GateKind g, size_t q0, size_t q1 = SIZE_MAX);

  std::string str() const;

  const std::vector<uint64_t>& x_words() const { return x_; }
  const std::vector<uint64_t>& z_words() const { return z_; }

 private:
  friend class StabilizerTableau;

  static bool bit(const std::vector<uint64_t>& w, size_t q) {
    return (w[q >> 6] >> (q & 63)) & 1;
  }
  static void set_bit(std::vector<uint64_t>& w, size_t q, bool v) {
    if (v) {
      w[q >> 6] |= uint64_t{1} << (q & 63);
    } else {
      w[q >> 6] &= ~(uint64_t{1} << (q & 63));
    }
  }

  void check_same_size(const PauliString& rhs) const;

  size_t n_ = 0;
  std::vector<uint64_t> x_;
  std::vector<uint64_t> z_;
  uint8_t phase_ = 0;  // i^phase_ in the XZ convention
};

}  // namespace ctx

#endif  // CTX_PAULI_HPP
