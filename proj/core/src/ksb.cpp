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

#include "ctx/ksb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ctx/dense.hpp"
#include "ctx/pauli_measurement.hpp"

namespace ctx {

namespace {

constexpr size_t kAncilla = 2;

std::string record_key(size_t i, int m) {
  return "c" + std::to_string(i) + "_" + std::to_string(m);
}

void append_initial_state(Circuit& c, KsbInitialState init) {
  switch (init) {
    case KsbInitialState::Zero:
      break;
    case KsbInitialState::Plus:
      c.append(GateKind::H, 0);
      c.append(GateKind::H, 1);
      break;
    case KsbInitialState::Bell:
      c.append(GateKind::H, 0);
      c.append(GateKind::CNOT, 0, 1);
      break;
  }
}

/// 9x9 commutation table of the plan cells, indexed 3*row + col.
std::array<std::array<bool, 9>, 9> commute_table(const MeasurementPlan& plan) {
  std::array<std::array<bool, 9>, 9> t{};
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      t[a][b] = plan[a / 3][a % 3].commutes_with(plan[b / 3][b % 3]);
    }
  }
  return t;
}

}  // namespace

std::vector<Context> random_context_sequence(size_t length, Rng& rng) {
  if (length == 0) throw std::invalid_argument("sequence needs length >= 1");
  std::vector<Context> seq;
  seq.reserve(length);
  for (size_t i = 0; i < length; ++i) {
    size_t pick = std::uniform_int_distribution<size_t>(0, 5)(rng);
    Context ctx;
    ctx.is_row = pick < 3;
    ctx.index = int(pick % 3);
    ctx.order = {0, 1, 2};
    std::shuffle(ctx.order.begin(), ctx.order.end(), rng);
    seq.push_back(ctx);
  }
  return seq;
}

KsbCircuit build_ksb_circuit(const std::vector<Context>& sequence,
                             KsbInitialState init) {
  MeasurementPlan plan = magic_square_plan();
  KsbCircuit kc;
  kc.sequence = sequence;
  kc.signs.resize(sequence.size());
  Circuit c(3);
  append_initial_state(c, init);
  for (size_t i = 0; i < sequence.size(); ++i) {
    for (int m = 0; m < 3; ++m) {
      auto [r, col] = sequence[i].cell(m);
      PauliString p = embed_on_pair(plan[r][col], 3, 0, 1);
      kc.signs[i][m] = append_qnd_measurement(c, p, kAncilla,
                                              record_key(i, m));
    }
  }
  kc.circuit = std::move(c);
  return kc;
}

std::vector<ContextOutcome> decode_ksb(const KsbCircuit& kc,
                                       const MeasurementRecord& rec) {
  std::vector<ContextOutcome> out;
  out.reserve(kc.sequence.size());
  for (size_t i = 0; i < kc.sequence.size(); ++i) {
    ContextOutcome o;
    o.ctx = kc.sequence[i];
    o.position = i;
    o.product = 1;
    for (int m = 0; m < 3; ++m) {
      int bit = rec[kc.circuit.record_index(record_key(i, m))];
      o.outcomes[m] = kc.signs[i][m] * (bit ? -1 : +1);
      o.product *= o.outcomes[m];
    }
    out.push_back(o);
  }
  return out;
}

std::vector<ContextOutcome> run_ksb_shot(const KsbCircuit& kc,
                                         const NoiseParams& p,
                                         const MechanismToggles& toggles,
                                         Rng& rng) {
  MeasurementRecord rec = run_noisy(kc.circuit, p, toggles, rng);
  return decode_ksb(kc, rec);
}

KsbSummary chi_ksb(const std::vector<std::vector<ContextOutcome>>& shots) {
  std::array<size_t, 3> row_n{}, row_pos{}, col_n{}, col_pos{};
  for (const auto& shot : shots) {
    for (const ContextOutcome& o : shot) {
      if (o.ctx.is_row) {
        ++row_n[o.ctx.index];
        row_pos[o.ctx.index] += o.product > 0;
      } else {
        ++col_n[o.ctx.index];
        col_pos[o.ctx.index] += o.product > 0;
      }
    }
  }
  KsbSummary s{};
  double var = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (row_n[i] == 0 || col_n[i] == 0) {
      throw std::invalid_argument("a context class has no samples");
    }
    double pr = double(row_pos[i]) / double(row_n[i]);
    double pc = double(col_pos[i]) / double(col_n[i]);
    s.row_mean[i] = 2.0 * pr - 1.0;
    s.col_mean[i] = 2.0 * pc - 1.0;
    var += 4.0 * pr * (1.0 - pr) / double(row_n[i]);
    var += 4.0 * pc * (1.0 - pc) / double(col_n[i]);
  }
  s.chi = s.row_mean[0] + s.row_mean[1] + s.row_mean[2] - s.col_mean[0] -
          s.col_mean[1] - s.col_mean[2];
  s.sigma = std::sqrt(var);
  return s;
}

NchvSearch nchv_bound_exhaustive() {
  NchvSearch res{-100, 100, 0};
  for (int table = 0; table < 512; ++table) {
    int v[9];
    for (int i = 0; i < 9; ++i) v[i] = (table >> i) & 1 ? -1 : +1;
    int chi = 0;
    for (int j = 0; j < 3; ++j) chi += v[3 * j] * v[3 * j + 1] * v[3 * j + 2];
    for (int k = 0; k < 3; ++k) chi -= v[k] * v[3 + k] * v[6 + k];
    if (chi > res.max_chi) {
      res.max_chi = chi;
      res.count_max = 1;
    } else if (chi == res.max_chi) {
      ++res.count_max;
    }
    res.min_chi = std::min(res.min_chi, chi);
  }
  return res;
}

std::array<PauliAgreement, 9> p_agree_stats(
    const std::vector<std::vector<ContextOutcome>>& shots) {
  MeasurementPlan plan = magic_square_plan();
  auto commutes = commute_table(plan);
  std::array<PauliAgreement, 9> stats;
  for (int i = 0; i < 9; ++i) stats[i] = PauliAgreement{i / 3, i % 3};
  for (const auto& shot : shots) {
    std::array<int, 9> last_outcome;
    std::array<bool, 9> seen{};
    std::array<bool, 9> disturbed{};
    for (const ContextOutcome& o : shot) {
      for (int m = 0; m < 3; ++m) {
        auto [r, c] = o.ctx.cell(m);
        int cell = 3 * r + c;
        if (seen[cell]) {
          PauliAgreement& st = stats[cell];
          bool agree = o.outcomes[m] == last_outcome[cell];
          if (disturbed[cell]) {
            ++st.incompatible_n;
            st.incompatible_agree += agree;
          } else {
            ++st.compatible_n;
            st.compatible_agree += agree;
          }
        }
        seen[cell] = true;
        last_outcome[cell] = o.outcomes[m];
        disturbed[cell] = false;
        for (int other = 0; other < 9; ++other) {
          if (other != cell && !commutes[other][cell]) disturbed[other] = true;
        }
      }
    }
  }
  return stats;
}

namespace {

/// One dense-trajectory QND fragment with a Z(delta) on the ancilla before
/// its final Hadamard, matching the Clifford fragment gate for gate.
class DenseKsbRunner {
 public:
  DenseKsbRunner(const NoiseParams& p, const MechanismToggles& toggles,
                 double delta, Rng& rng)
      : p_(p), toggles_(toggles), delta_(delta), rng_(rng) {}

  int measure_cell(DenseState& s, const PauliString& cell_op) {
    int sign = cell_op.sign_int();
    gate1(s, GateKind::H, kAncilla);
    for (size_t q = 0; q < 2; ++q) {
      switch (cell_op.pauli_at(q)) {
        case 'X':
          gate2(s, GateKind::CNOT, kAncilla, q);
          break;
        case 'Z':
          gate2(s, GateKind::CZ, kAncilla, q);
          break;
        case 'Y':
          gate1(s, GateKind::S_DAG, q);
          gate2(s, GateKind::CNOT, kAncilla, q);
          gate1(s, GateKind::S, q);
          break;
        default:
          break;
      }
    }
    if (delta_ != 0.0) s.apply_rz(kAncilla, delta_);
    gate1(s, GateKind::H, kAncilla);
    int bit = s.measure_qubit(kAncilla, rng_);
    if (toggles_.readout) bit = flip_readout(bit, p_.e0, p_.e1, rng_);
    s.reset_qubit(kAncilla, rng_);
    return sign * (bit ? -1 : +1);
  }

 private:
  void apply_error_site(DenseState& s, const PauliString& e, size_t q) {
    switch (e.pauli_at(q)) {
      case 'X': s.apply(GateKind::X, q); break;
      case 'Y': s.apply(GateKind::Y, q); break;
      case 'Z': s.apply(GateKind::Z, q); break;
      default: break;
    }
  }
  void gate1(DenseState& s, GateKind g, size_t q) {
    s.apply(g, q);
    if (toggles_.sq) {
      if (auto e = sample_sq_error(3, q, p_.e_p_sq, rng_)) {
        apply_error_site(s, *e, q);
      }
    }
  }
  void gate2(DenseState& s, GateKind g, size_t a, size_t b) {
    s.apply(g, a, b);
    if (toggles_.twoq) {
      if (auto e = sample_2q_error(3, a, b, p_.e_p_2q, rng_)) {
        apply_error_site(s, *e, a);
        apply_error_site(s, *e, b);
      }
    }
  }

  const NoiseParams& p_;
  const MechanismToggles& toggles_;
  double delta_;
  Rng& rng_;
};

}  // namespace

std::vector<std::pair<double, double>> phase_error_sweep(
    const std::vector<double>& deltas, const std::vector<Context>& sequence,
    size_t shots, const NoiseParams& p, const MechanismToggles& toggles,
    uint64_t seed, KsbInitialState init) {
  if (deltas.empty()) throw std::invalid_argument("empty delta grid");
  MeasurementPlan plan = magic_square_plan();
  std::vector<std::pair<double, double>> curve;
  curve.reserve(deltas.size());
  for (size_t d = 0; d < deltas.size(); ++d) {
    std::vector<std::vector<ContextOutcome>> all_shots;
    all_shots.reserve(shots);
    for (size_t shot = 0; shot < shots; ++shot) {
      Rng rng = make_rng(seed, d, shot);
      DenseKsbRunner runner(p, toggles, deltas[d], rng);
      DenseState s = DenseState::zero_pure(3);
      switch (init) {
        case KsbInitialState::Zero:
          break;
        case KsbInitialState::Plus:
          s.apply(GateKind::H, 0);
          s.apply(GateKind::H, 1);
          break;
        case KsbInitialState::Bell:
          s.apply(GateKind::H, 0);
          s.apply(GateKind::CNOT, 0, 1);
          break;
      }
      std::vector<ContextOutcome> shot_outcomes;
      shot_outcomes.reserve(sequence.size());
      for (size_t i = 0; i < sequence.size(); ++i) {
        ContextOutcome o;
        o.ctx = sequence[i];
        o.position = i;
        o.product = 1;
        for (int m = 0; m < 3; ++m) {
          auto [r, col] = sequence[i].cell(m);
          PauliString cell = embed_on_pair(plan[r][col], 3, 0, 1);
          o.outcomes[m] = runner.measure_cell(s, cell);
          o.product *= o.outcomes[m];
        }
        shot_outcomes.push_back(o);
      }
      all_shots.push_back(std::move(shot_outcomes));
    }
    curve.emplace_back(deltas[d], chi_ksb(all_shots).chi);
  }
  return curve;
}

}  // namespace ctx
