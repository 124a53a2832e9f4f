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

#include "ctx/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace ctx {

namespace {

constexpr size_t kMaxPureQubits = 14;
constexpr size_t kMaxDensityQubits = 10;

const Amp kI{0.0, 1.0};

Mat2 gate_matrix(GateKind g) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (g) {
    case GateKind::H: return {s, s, s, -s};
    case GateKind::S: return {1.0, 0.0, 0.0, kI};
    case GateKind::S_DAG: return {1.0, 0.0, 0.0, -kI};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -kI, kI, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::SQRT_X:
      return {Amp{0.5, 0.5}, Amp{0.5, -0.5}, Amp{0.5, -0.5}, Amp{0.5, 0.5}};
    default:
      throw std::invalid_argument("no 2x2 matrix for this gate");
  }
}

Mat2 dagger(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

}  // namespace

bool KrausChannel::is_complete(double tol) const {
  Mat2 acc{0.0, 0.0, 0.0, 0.0};
  for (const Mat2& k : ops) {
    Mat2 kd = dagger(k);
    // acc += kd * k
    acc[0] += kd[0] * k[0] + kd[1] * k[2];
    acc[1] += kd[0] * k[1] + kd[1] * k[3];
    acc[2] += kd[2] * k[0] + kd[3] * k[2];
    acc[3] += kd[2] * k[1] + kd[3] * k[3];
  }
  return std::abs(acc[0] - 1.0) < tol && std::abs(acc[1]) < tol &&
         std::abs(acc[2]) < tol && std::abs(acc[3] - 1.0) < tol;
}

KrausChannel KrausChannel::amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw std::invalid_argument("gamma outside [0, 1]");
  }
  KrausChannel ch;
  ch.ops.push_back({1.0, 0.0, 0.0, std::sqrt(1.0 - gamma)});
  ch.ops.push_back({0.0, std::sqrt(gamma), 0.0, 0.0});
  return ch;
}

DenseState::DenseState(size_t n, bool density) : n_(n), density_(density) {
  if (n == 0) throw std::invalid_argument("state needs at least one qubit");
  if (!density && n > kMaxPureQubits) {
    throw std::invalid_argument("pure dense state limited to 14 qubits");
  }
  if (density && n > kMaxDensityQubits) {
    throw std::invalid_argument("density matrix limited to 10 qubits");
  }
  v_.assign(density ? dim() * dim() : dim(), Amp{0.0, 0.0});
  v_[0] = 1.0;
}

DenseState DenseState::zero_pure(size_t n) { return DenseState(n, false); }
DenseState DenseState::zero_density(size_t n) { return DenseState(n, true); }

DenseState DenseState::ghz_pure(size_t n) {
  DenseState s(n, false);
  const double a = 1.0 / std::sqrt(2.0);
  s.v_[0] = a;
  s.v_[s.dim() - 1] = a;
  return s;
}

DenseState DenseState::ghz_density(size_t n) {
  DenseState s = ghz_pure(n);
  s.promote_to_density();
  return s;
}

void DenseState::promote_to_density() {
  if (density_) return;
  if (n_ > kMaxDensityQubits) {
    throw std::invalid_argument("density matrix limited to 10 qubits");
  }
  const size_t d = dim();
  std::vector<Amp> rho(d * d);
  for (size_t r = 0; r < d; ++r) {
    for (size_t c = 0; c < d; ++c) rho[r * d + c] = v_[r] * std::conj(v_[c]);
  }
  v_ = std::move(rho);
  density_ = true;
}

void DenseState::apply_mat1_side(size_t q, const Mat2& u, int side) {
  const size_t m = size_t{1} << q;
  if (!density_) {
    for (size_t idx = 0; idx < dim(); ++idx) {
      if (idx & m) continue;
      Amp a = v_[idx], b = v_[idx | m];
      v_[idx] = u[0] * a + u[1] * b;
      v_[idx | m] = u[2] * a + u[3] * b;
    }
    return;
  }
  const size_t d = dim();
  Mat2 w = u;
  if (side == 1) {
    for (Amp& e : w) e = std::conj(e);
  }
  if (side == 0) {
    for (size_t r = 0; r < d; ++r) {
      if (r & m) continue;
      for (size_t c = 0; c < d; ++c) {
        Amp a = v_[r * d + c], b = v_[(r | m) * d + c];
        v_[r * d + c] = w[0] * a + w[1] * b;
        v_[(r | m) * d + c] = w[2] * a + w[3] * b;
      }
    }
  } else {
    for (size_t r = 0; r < d; ++r) {
      for (size_t c = 0; c < d; ++c) {
        if (c & m) continue;
        Amp a = v_[r * d + c], b = v_[r * d + (c | m)];
        v_[r * d + c] = w[0] * a + w[1] * b;
        v_[r * d + (c | m)] = w[2] * a + w[3] * b;
      }
    }
  }
}

void DenseState::apply_two_qubit_side(GateKind g, size_t q0, size_t q1,
                                      int side) {
  const size_t m0 = size_t{1} << q0;
  const size_t m1 = size_t{1} << q1;
  const size_t d = dim();
  auto transform_index = [&](auto&& fn) {
    if (!density_) {
      fn([&](size_t i) -> Amp& { return v_[i]; }, d);
    } else if (side == 0) {
      for (size_t c = 0; c < d; ++c) {
        fn([&, c](size_t r) -> Amp& { return v_[r * d + c]; }, d);
      }
    } else {
      for (size_t r = 0; r < d; ++r) {
        fn([&, r](size_t c) -> Amp& { return v_[r * d + c]; }, d);
      }
    }
  };
  if (g == GateKind::CZ) {
    // CZ is real diagonal, identical on ket and bra sides.
    transform_index([&](auto at, size_t lim) {
      for (size_t i = 0; i < lim; ++i) {
        if ((i & m0) && (i & m1)) at(i) = -at(i);
      }
    });
  } else if (g == GateKind::CNOT) {
    transform_index([&](auto at, size_t lim) {
      for (size_t i = 0; i < lim; ++i) {
        if ((i & m0) && !(i & m1)) std::swap(at(i), at(i | m1));
      }
    });
  } else {
    throw std::invalid_argument("unknown two-qubit gate");
  }
}

void DenseState::apply(GateKind g, size_t q0, size_t q1) {
  if (q0 >= n_ || (is_two_qubit(g) && (q1 >= n_ || q1 == q0))) {
    throw std::out_of_range("gate target out of range");
  }
  if (is_two_qubit(g)) {
    apply_two_qubit_side(g, q0, q1, 0);
    if (density_) apply_two_qubit_side(g, q0, q1, 1);
    return;
  }
  Mat2 u = gate_matrix(g);
  apply_mat1_side(q0, u, 0);
  if (density_) apply_mat1_side(q0, u, 1);
}

void DenseState::apply_unitary1(size_t q, const Mat2& u) {
  if (q >= n_) throw std::out_of_range("gate target out of range");
  apply_mat1_side(q, u, 0);
  if (density_) apply_mat1_side(q, u, 1);
}

void DenseState::apply_rz(size_t q, double angle) {
  apply_unitary1(q, {1.0, 0.0, 0.0, std::exp(kI * angle)});
}

void DenseState::apply_channel1(size_t q, const KrausChannel& ch) {
  if (q >= n_) throw std::out_of_range("channel target out of range");
  promote_to_density();
  const size_t d = dim();
  std::vector<Amp> rho = v_;
  std::vector<Amp> out(d * d, Amp{0.0, 0.0});
  for (const Mat2& k : ch.ops) {
    v_ = rho;
    apply_mat1_side(q, k, 0);
    apply_mat1_side(q, k, 1);
    for (size_t i = 0; i < d * d; ++i) out[i] += v_[i];
  }
  v_ = std::move(out);
}

void DenseState::apply_amplitude_damping(size_t q, double gamma) {
  apply_channel1(q, KrausChannel::amplitude_damping(gamma));
}

void DenseState::apply_dd_idle(size_t q, double t, double t1, double dt) {
  if (t1 <= 0.0 || dt <= 0.0) {
    throw std::invalid_argument("durations must be positive");
  }
  if (t < 0.0) throw std::invalid_argument("negative idle time");
  if (t == 0.0) return;
  promote_to_density();
  size_t cycles = static_cast<size_t>(std::llround(t / dt));
  if (cycles == 0) cycles = 1;
  const double gamma = (t / static_cast<double>(cycles)) / (2.0 * t1);
  const KrausChannel ad = KrausChannel::amplitude_damping(gamma);
  for (size_t i = 0; i < cycles; ++i) {
    apply_channel1(q, ad);
    apply(GateKind::Y, q);
    apply_channel1(q, ad);
    apply(GateKind::Y, q);
  }
}

double DenseState::fidelity_to_ghz() const {
  const size_t d = dim();
  if (!density_) {
    Amp overlap = (v_[0] + v_[d - 1]) / std::sqrt(2.0);
    return std::norm(overlap);
  }
  Amp f = 0.5 * (v_[0] + v_[d - 1] + v_[(d - 1) * d] + v_[(d - 1) * d + d - 1]);
  return f.real();
}

double DenseState::pauli_expectation(const PauliString& p) const {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("Pauli size mismatch");
  }
  const uint64_t xm = p.x_words()[0];
  const uint64_t zm = p.z_words()[0];
  Amp phase_k{1.0, 0.0};
  switch (p.xz_phase_exponent()) {
    case 1: phase_k = kI; break;
    case 2: phase_k = -1.0; break;
    case 3: phase_k = -kI; break;
    default: break;
  }
  const size_t d = dim();
  Amp acc = 0.0;
  if (!density_) {
    // <psi|P|psi> with P|b> = i^k (-1)^{b.z} |b^x>.
    for (size_t b = 0; b < d; ++b) {
      double sgn = std::popcount(b & zm) & 1 ? -1.0 : 1.0;
      acc += std::conj(v_[b ^ xm]) * phase_k * sgn * v_[b];
    }
  } else {
    for (size_t c = 0; c < d; ++c) {
      double sgn = std::popcount(c & zm) & 1 ? -1.0 : 1.0;
      acc += v_[c * d + (c ^ xm)] * phase_k * sgn;
    }
  }
  return acc.real();
}

std::vector<double> DenseState::probabilities() const {
  const size_t d = dim();
  std::vector<double> p(d);
  for (size_t i = 0; i < d; ++i) {
    p[i] = density_ ? v_[i * d + i].real() : std::norm(v_[i]);
  }
  return p;
}

std::vector<uint8_t> DenseState::sample_measurement(Rng& rng) const {
  std::vector<double> p = probabilities();
  double r = random_unit(rng);
  size_t pick = p.size() - 1;
  double cum = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    cum += p[i];
    if (r < cum) {
      pick = i;
      break;
    }
  }
  std::vector<uint8_t> bits(n_);
  for (size_t q = 0; q < n_; ++q) bits[q] = (pick >> q) & 1;
  return bits;
}

double DenseState::prob_of_one(size_t q) const {
  const size_t m = size_t{1} << q;
  const size_t d = dim();
  double p = 0.0;
  for (size_t i = 0; i < d; ++i) {
    if (i & m) p += density_ ? v_[i * d + i].real() : std::norm(v_[i]);
  }
  return p;
}

int DenseState::measure_qubit(size_t q, Rng& rng) {
  if (q >= n_) throw std::out_of_range("qubit index out of range");
  double p1 = prob_of_one(q);
  int outcome = random_unit(rng) < p1 ? 1 : 0;
  double norm = outcome ? p1 : 1.0 - p1;
  if (norm <= 0.0) {
    outcome = 1 - outcome;
    norm = 1.0 - norm;
  }
  const size_t m = size_t{1} << q;
  const size_t d = dim();
  if (!density_) {
    const double scale = 1.0 / std::sqrt(norm);
    for (size_t i = 0; i < d; ++i) {
      bool keep = ((i & m) != 0) == (outcome == 1);
      v_[i] = keep ? v_[i] * scale : Amp{0.0, 0.0};
    }
  } else {
    const double scale = 1.0 / norm;
    for (size_t r = 0; r < d; ++r) {
      for (size_t c = 0; c < d; ++c) {
        bool keep = (((r & m) != 0) == (outcome == 1)) &&
                    (((c & m) != 0) == (outcome == 1));
        v_[r * d + c] = keep ? v_[r * d + c] * scale : Amp{0.0, 0.0};
      }
    }
  }
  return outcome;
}

void DenseState::reset_qubit(size_t q, Rng& rng) {
  if (measure_qubit(q, rng) == 1) apply(GateKind::X, q);
}

double DenseState::trace() const {
  if (!density_) {
    double s = 0.0;
    for (const Amp& a : v_) s += std::norm(a);
    return s;
  }
  const size_t d = dim();
  double s = 0.0;
  for (size_t i = 0; i < d; ++i) s += v_[i * d + i].real();
  return s;
}

MeasurementRecord run_circuit_dense(DenseState& s, const Circuit& c,
                                    Rng& rng) {
  if (s.num_qubits() != c.num_qubits()) {
    throw std::invalid_argument("circuit width does not match state");
  }
  MeasurementRecord rec(c.num_measurements());
  for (const Operation& op : c.ops()) {
    switch (op.gate) {
      case GateKind::MEASURE_Z:
        rec[static_cast<size_t>(op.record)] =
            static_cast<uint8_t>(s.measure_qubit(op.q0, rng));
        break;
      case GateKind::RESET:
        s.reset_qubit(op.q0, rng);
        break;
      default:
        s.apply(op.gate, op.q0, op.q1);
    }
  }
  return rec;
}

}  // namespace ctx
