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

#include "ctx/ghz_budget.hpp"

#include <cmath>
#include <stdexcept>

#include "ctx/tableau.hpp"

namespace ctx {

PauliString stabilizer_from_selection(size_t n,
                                      const std::vector<uint8_t>& sel) {
  if (sel.size() != n) throw std::invalid_argument("selection size mismatch");
  PauliString acc(n);
  if (sel[n - 1]) {
    PauliString all_x(n);
    for (size_t q = 0; q < n; ++q) all_x.set_x(q, true);
    acc.mul(all_x);
  }
  for (size_t k = 0; k + 1 < n; ++k) {
    if (!sel[k]) continue;
    PauliString zz(n);
    zz.set_z(k, true);
    zz.set_z(k + 1, true);
    acc.mul(zz);
  }
  return acc;
}

PauliString stabilizer_from_index(size_t n, uint64_t i) {
  if (n == 0 || n > 64) throw std::invalid_argument("index form needs n in 1..64");
  if (n < 64 && i >= (uint64_t{1} << n)) {
    throw std::out_of_range("stabilizer index out of range");
  }
  std::vector<uint8_t> sel(n);
  for (size_t k = 0; k < n; ++k) sel[k] = (i >> k) & 1;
  return stabilizer_from_selection(n, sel);
}

ChannelSplit f_t1(const std::vector<double>& idle_times, double t1) {
  if (t1 <= 0.0) throw std::invalid_argument("T1 must be positive");
  const size_t n = idle_times.size();
  double plus = 1.0, minus = 1.0, coh = 1.0;
  for (double t : idle_times) {
    if (t < 0.0) throw std::invalid_argument("negative idle time");
    double e = std::exp(-t / t1);
    plus *= (1.0 + e) / 2.0;
    minus *= (1.0 - e) / 2.0;
    coh *= std::exp(-t / (2.0 * t1));
  }
  (void)n;
  double fz = plus + minus;
  double fx = coh;
  return {(fz + fx) / 2.0, fz, fx};
}

ChannelSplit f_sq(size_t n, double e) {
  if (e < 0.0 || e > 1.0) throw std::invalid_argument("rate outside [0, 1]");
  double f = std::pow(1.0 - e, double(n));
  double fz = std::pow(1.0 - 2.0 * e / 3.0, double(n));
  return {f, fz, 2.0 * f - fz};
}

ChannelSplit f_2q(size_t n, double e) {
  if (e < 0.0 || e > 1.0) throw std::invalid_argument("rate outside [0, 1]");
  double f = std::pow(1.0 - 14.0 * e / 15.0, double(n));
  double fz = std::pow(1.0 - 12.0 * e / 15.0, double(n));
  return {f, fz, 2.0 * f - fz};
}

ChannelSplit f_readout_sym(double epsilon, size_t n) {
  if (epsilon < 0.0 || epsilon > 1.0) {
    throw std::invalid_argument("rate outside [0, 1]");
  }
  double fx = std::pow(1.0 - 2.0 * epsilon, double(n));
  double fz = std::pow(1.0 - epsilon, double(n)) + std::pow(epsilon, double(n));
  return {(fx + fz) / 2.0, fz, fx};
}

ChannelSplit f_readout_asym(double e0, double e1, size_t n) {
  if (e0 < 0.0 || e0 > 1.0 || e1 < 0.0 || e1 > 1.0) {
    throw std::invalid_argument("rate outside [0, 1]");
  }
  double fz = 0.5 * (std::pow(1.0 - e0, double(n)) + std::pow(e0, double(n)) +
                     std::pow(1.0 - e1, double(n)) + std::pow(e1, double(n)));
  // The oscillatory term averages (-1)^{#Y/2} over the X-type stabilizers,
  // Re[(1+i)^n] = 2^{n/2} cos(pi n / 4).
  double fx = std::pow(1.0 - e0 - e1, double(n)) +
              std::pow(2.0, 1.0 - double(n) / 2.0) *
                  std::pow(e1 - e0, double(n)) *
                  std::cos(M_PI * double(n) / 4.0);
  return {(fx + fz) / 2.0, fz, fx};
}

GhzSchedule schedule_from_growth(const GhzGrowth& growth,
                                 double moment_duration) {
  GhzSchedule s;
  s.n = growth.circuit.num_qubits();
  s.n_sq = growth.circuit.count_single_qubit_gates();
  s.n_2q = growth.circuit.count_two_qubit_gates();
  s.idle = idle_times(growth, moment_duration);
  return s;
}

TotalBudget f_total(const NoiseParams& p, const GhzSchedule& sched) {
  if (sched.n == 0) throw std::invalid_argument("empty schedule");
  TotalBudget b;
  // Schedules carry idle times in ns; NoiseParams carries T1 in us.
  b.t1 = p.t1 > 0.0 ? f_t1(sched.idle, p.t1 * 1000.0)
                    : ChannelSplit{1.0, 1.0, 1.0};
  b.sq = f_sq(sched.n_sq, p.e_p_sq);
  b.twoq = f_2q(sched.n_2q, p.e_p_2q);
  b.readout = p.e0 == p.e1 ? f_readout_sym(p.e0, sched.n)
                           : f_readout_asym(p.e0, p.e1, sched.n);
  b.total.f = b.t1.f * b.sq.f * b.twoq.f * b.readout.f;
  b.total.fz = b.t1.fz * b.sq.fz * b.twoq.fz * b.readout.fz;
  b.total.fx = b.t1.fx * b.sq.fx * b.twoq.fx * b.readout.fx;
  b.witnessed = b.total.f > 0.5;
  return b;
}

double win_prob_from_fx(double fx) {
  if (fx < -1.0 || fx > 1.0) throw std::invalid_argument("F_X outside [-1, 1]");
  return (1.0 + fx) / 2.0;
}

namespace {

/// Preparation shot with optional Pauli decoration, then (optionally
/// decorated) basis rotations, then a full noisy Z readout.
std::vector<uint8_t> mc_shot(
    const Circuit& prep,
    const std::vector<std::pair<GateKind, size_t>>& rotations,
    const NoiseParams& p, const MechanismToggles& tog,
    bool decorate_rotations, Rng& rng) {
  const size_t n = prep.num_qubits();
  StabilizerTableau t(n);
  for (const Operation& op : prep.ops()) {
    if (!is_unitary(op.gate)) {
      throw std::invalid_argument("preparation must be measurement-free");
    }
    t.apply(op.gate, op.q0, op.q1);
    std::optional<PauliString> err;
    if (is_two_qubit(op.gate)) {
      if (tog.twoq) err = sample_2q_error(n, op.q0, op.q1, p.e_p_2q, rng);
    } else if (tog.sq) {
      err = sample_sq_error(n, op.q0, p.e_p_sq, rng);
    }
    if (err) t.apply_pauli_error(*err);
  }
  for (auto [g, q] : rotations) {
    t.apply(g, q);
    if (decorate_rotations && tog.sq) {
      if (auto err = sample_sq_error(n, q, p.e_p_sq, rng)) {
        t.apply_pauli_error(*err);
      }
    }
  }
  std::vector<uint8_t> bits(n);
  for (size_t q = 0; q < n; ++q) {
    int bit = t.measure_z(q, rng);
    if (tog.readout) bit = flip_readout(bit, p.e0, p.e1, rng);
    bits[q] = static_cast<uint8_t>(bit);
  }
  return bits;
}

std::vector<uint8_t> random_selection(size_t n, bool x_type, Rng& rng) {
  std::vector<uint8_t> sel(n);
  for (size_t k = 0; k + 1 < n; ++k) sel[k] = random_bit(rng);
  sel[n - 1] = x_type ? 1 : 0;
  return sel;
}

/// Standard error of the class mean from per-stabilizer means, so it
/// covers both shot noise and the stabilizer-sampling spread. Falls back
/// to the binomial form when only one stabilizer was drawn.
double sigma_of_class(const std::vector<double>& means, size_t shots) {
  const size_t m = means.size();
  if (m > 1) {
    double mu = 0.0;
    for (double v : means) mu += v;
    mu /= double(m);
    double ss = 0.0;
    for (double v : means) ss += (v - mu) * (v - mu);
    return std::sqrt(ss / double(m - 1) / double(m));
  }
  double var = 1.0 - means[0] * means[0];
  if (var < 0.0) var = 0.0;
  return std::sqrt(var / double(shots));
}

}  // namespace

FidelityReport estimate_fidelity_mc(const GhzGrowth& growth,
                                    const NoiseParams& p,
                                    const MechanismToggles& toggles,
                                    size_t m_per_class, size_t shots,
                                    uint64_t seed, bool decorate_rotations) {
  const size_t n = growth.circuit.num_qubits();
  if (m_per_class == 0 || shots == 0) {
    throw std::invalid_argument("counts must be >= 1");
  }
  if (n <= 30 && m_per_class > (size_t{1} << (n - 1))) {
    throw std::invalid_argument("m exceeds the stabilizer class size");
  }
  Rng sel_rng = make_rng(seed, 0xfffful);

  // Z class: an independent computational-basis batch per sampled
  // diagonal stabilizer, so the per-stabilizer means are uncorrelated.
  std::vector<double> z_means;
  z_means.reserve(m_per_class);
  for (size_t k = 0; k < m_per_class; ++k) {
    PauliString st =
        stabilizer_from_selection(n, random_selection(n, false, sel_rng));
    double sum = 0.0;
    for (size_t s = 0; s < shots; ++s) {
      Rng rng = make_rng(seed, 1 + k, s);
      std::vector<uint8_t> bits =
          mc_shot(growth.circuit, {}, p, toggles, decorate_rotations, rng);
      int parity = 0;
      for (size_t q = 0; q < n; ++q) parity ^= st.z_bit(q) & bits[q];
      sum += parity ? -1.0 : 1.0;
    }
    z_means.push_back(sum / double(shots));
  }
  double fz = 0.0;
  for (double v : z_means) fz += v;
  fz /= double(z_means.size());

  // X class: one rotated-basis circuit per sampled stabilizer.
  std::vector<double> x_means;
  x_means.reserve(m_per_class);
  for (size_t k = 0; k < m_per_class; ++k) {
    PauliString st =
        stabilizer_from_selection(n, random_selection(n, true, sel_rng));
    std::vector<std::pair<GateKind, size_t>> rotations;
    PauliString work = st;
    for (size_t q = 0; q < n; ++q) {
      char site = work.pauli_at(q);
      if (site == 'Y') {
        rotations.emplace_back(GateKind::S_DAG, q);
        work.conjugate_by(GateKind::S_DAG, q);
      }
      rotations.emplace_back(GateKind::H, q);
      work.conjugate_by(GateKind::H, q);
    }
    int sign = work.sign_int();
    double sum = 0.0;
    for (size_t s = 0; s < shots; ++s) {
      Rng rng = make_rng(seed, 1 + m_per_class + k, s);
      std::vector<uint8_t> bits = mc_shot(growth.circuit, rotations, p,
                                          toggles, decorate_rotations, rng);
      int parity = 0;
      for (uint8_t b : bits) parity ^= b;
      sum += double(sign) * (parity ? -1.0 : 1.0);
    }
    x_means.push_back(sum / double(shots));
  }
  double fx = 0.0;
  for (double v : x_means) fx += v;
  fx /= double(x_means.size());

  FidelityReport r;
  r.fz = fz;
  r.fx = fx;
  r.f = (fz + fx) / 2.0;
  r.sigma_z = sigma_of_class(z_means, shots);
  r.sigma_x = sigma_of_class(x_means, shots);
  r.sigma = 0.5 * std::sqrt(r.sigma_z * r.sigma_z + r.sigma_x * r.sigma_x);
  r.m_z = m_per_class;
  r.m_x = m_per_class;
  r.shots = shots;
  return r;
}

}  // namespace ctx
