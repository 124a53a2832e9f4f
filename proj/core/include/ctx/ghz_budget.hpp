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

#ifndef CTX_GHZ_BUDGET_HPP
#define CTX_GHZ_BUDGET_HPP

#include <cstdint>
#include <vector>

#include "ctx/ghz_game.hpp"
#include "ctx/noise.hpp"
#include "ctx/pauli.hpp"

namespace ctx {

/// GHZ_N stabilizer S_i: the product of generators selected by the binary
/// digits of i. Generators: Q_k = Z_k Z_{k+1} for k < N-1 and
/// Q_{N-1} = X...X. The top digit decides Z-type (0) versus X-type (1).
PauliString stabilizer_from_index(size_t n, uint64_t i);

/// Same, with an explicit generator-selection bit per index (usable past
/// 64 qubits). sel.size() == n.
PauliString stabilizer_from_selection(size_t n,
                                      const std::vector<uint8_t>& sel);

/// One channel's fidelity with its Z/X split; f == (fz + fx) / 2.
struct ChannelSplit {
  double f;
  double fz;
  double fx;
};

/// Decay of GHZ fidelity from per-qubit decoupled idles of duration t_i.
/// fz covers the population terms, fx the coherence term.
ChannelSplit f_t1(const std::vector<double>& idle_times, double t1);

/// Depolarizing loss from n single-qubit gates at Pauli error rate e.
ChannelSplit f_sq(size_t n, double e);

/// Depolarizing loss from n two-qubit gates; 3 of the 15 error Paulis
/// (ZZ, IZ, ZI) leave the Z-type stabilizers unchanged.
ChannelSplit f_2q(size_t n, double e);

ChannelSplit f_readout_sym(double epsilon, size_t n);
/// Asymmetric closed form; reduces to f_readout_sym when e0 == e1.
ChannelSplit f_readout_asym(double e0, double e1, size_t n);

/// Gate and idle accounting extracted from one growth schedule.
struct GhzSchedule {
  size_t n;
  size_t n_sq;
  size_t n_2q;
  std::vector<double> idle;  // same unit as t1 below
};

GhzSchedule schedule_from_growth(const GhzGrowth& growth,
                                 double moment_duration);

struct TotalBudget {
  ChannelSplit t1;
  ChannelSplit sq;
  ChannelSplit twoq;
  ChannelSplit readout;
  ChannelSplit total;   // per-part products of the four channels
  bool witnessed;       // total.f > 0.5
};

/// Product of the independent channel contributions. p.t1 and sched.idle
/// must share a unit; p.t1 == 0 disables the idle channel.
TotalBudget f_total(const NoiseParams& p, const GhzSchedule& sched);

double win_prob_from_fx(double fx);

struct FidelityReport {
  double f;
  double fz;
  double fx;
  double sigma;
  double sigma_z;
  double sigma_x;
  size_t m_z;
  size_t m_x;
  size_t shots;
};

/// Monte-Carlo fidelity: F_Z from one computational-basis batch evaluated
/// on m sampled Z-type stabilizers, F_X from one rotated-basis circuit per
/// sampled X-type stabilizer. Basis-change rotations are noiseless unless
/// decorate_rotations is set (they are not part of the preparation being
/// scored).
FidelityReport estimate_fidelity_mc(const GhzGrowth& growth,
                                    const NoiseParams& p,
                                    const MechanismToggles& toggles,
                                    size_t m_per_class, size_t shots,
                                    uint64_t seed,
                                    bool decorate_rotations = false);

}  // namespace ctx

#endif  // CTX_GHZ_BUDGET_HPP
