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

#include "ctx/magic_square.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctx/pauli_measurement.hpp"
#include "ctx/tableau.hpp"

namespace ctx {

namespace {

void check_indices(int j, int k) {
  if (j < 0 || j > 2 || k < 0 || k > 2) {
    throw std::out_of_range("row/column index outside 0..2");
  }
}

int eigen(const Circuit& c, const MeasurementRecord& rec,
          const CellReadout& cell) {
  int bit = rec[c.record_index(cell.key)];
  return cell.sign * (bit ? -1 : +1);
}

std::array<PauliString, 3> row_cells(const MeasurementPlan& plan, int j) {
  return {plan[j][0], plan[j][1], plan[j][2]};
}

std::array<PauliString, 3> col_cells(const MeasurementPlan& plan, int k) {
  return {plan[0][k], plan[1][k], plan[2][k]};
}

/// Compiles one player's Variation-I line: the two lexicographically first
/// cells are measured jointly, the remaining cell is inferred.
std::array<CellReadout, 3> append_player_line_v1(
    Circuit& c, const std::array<PauliString, 3>& cells, size_t q0, size_t q1,
    const std::string& prefix) {
  std::array<size_t, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return cells[a].str() < cells[b].str();
  });
  PauliString pa = embed_on_pair(cells[order[0]], c.num_qubits(), q0, q1);
  PauliString pb = embed_on_pair(cells[order[1]], c.num_qubits(), q0, q1);
  auto slots = append_pair_readout(c, pa, pb);
  std::array<CellReadout, 3> out;
  for (int m = 0; m < 2; ++m) {
    std::string key = prefix + std::to_string(order[m]);
    c.measure(slots[m].qubit, key);
    out[order[m]] = {key, slots[m].sign, false};
  }
  out[order[2]] = {"", +1, true};
  return out;
}

std::array<CellReadout, 3> append_player_line_v2(
    Circuit& c, const std::array<PauliString, 3>& cells, size_t q0, size_t q1,
    size_t anc0, size_t anc1, const std::string& prefix) {
  std::array<CellReadout, 3> out;
  for (int m = 0; m < 2; ++m) {
    PauliString p = embed_on_pair(cells[m], c.num_qubits(), q0, q1);
    std::string key = prefix + std::to_string(m);
    int sign = append_qnd_measurement(c, p, m == 0 ? anc0 : anc1, key);
    out[m] = {key, sign, false};
  }
  PauliString last = embed_on_pair(cells[2], c.num_qubits(), q0, q1);
  PauliReadout ro = append_single_pauli_readout(c, last);
  std::string key = prefix + "2";
  c.measure(ro.qubit, key);
  out[2] = {key, ro.sign, false};
  return out;
}

}  // namespace

MeasurementPlan magic_square_plan() {
  return MeasurementPlan{{
      {PauliString::from_str("IZ"), PauliString::from_str("ZI"),
       PauliString::from_str("ZZ")},
      {PauliString::from_str("XI"), PauliString::from_str("IX"),
       PauliString::from_str("XX")},
      {PauliString::from_str("-XZ"), PauliString::from_str("-ZX"),
       PauliString::from_str("YY")},
  }};
}

PauliString embed_on_pair(const PauliString& p2, size_t n, size_t a,
                          size_t b) {
  PauliString p(n);
  p.set_x(a, p2.x_bit(0));
  p.set_z(a, p2.z_bit(0));
  p.set_x(b, p2.x_bit(1));
  p.set_z(b, p2.z_bit(1));
  p.set_sign(p2.sign_int());
  return p;
}

Circuit bell_pairs_circuit() {
  Circuit c(4);
  c.append(GateKind::H, 0);
  c.append(GateKind::CNOT, 0, 2);
  c.append(GateKind::H, 1);
  c.append(GateKind::CNOT, 1, 3);
  return c;
}

MagicSquareCircuit build_variation_1(int j, int k) {
  check_indices(j, k);
  MeasurementPlan plan = magic_square_plan();
  MagicSquareCircuit game;
  game.circuit = bell_pairs_circuit();
  game.variation = 1;
  game.j = j;
  game.k = k;
  game.circuit.barrier();
  game.alice = append_player_line_v1(game.circuit, row_cells(plan, j), 0, 1,
                                     "a");
  game.bob = append_player_line_v1(game.circuit, col_cells(plan, k), 2, 3,
                                   "b");
  return game;
}

MagicSquareCircuit build_variation_2(int j, int k) {
  check_indices(j, k);
  MeasurementPlan plan = magic_square_plan();
  MagicSquareCircuit game;
  Circuit c(8);
  c.append(GateKind::H, 0);
  c.append(GateKind::CNOT, 0, 2);
  c.append(GateKind::H, 1);
  c.append(GateKind::CNOT, 1, 3);
  c.barrier();
  game.variation = 2;
  game.j = j;
  game.k = k;
  game.alice = append_player_line_v2(c, row_cells(plan, j), 0, 1, 4, 5, "a");
  game.bob = append_player_line_v2(c, col_cells(plan, k), 2, 3, 6, 7, "b");
  game.circuit = std::move(c);
  return game;
}

MagicSquareGameRecord decode_magic_square(const MagicSquareCircuit& game,
                                          const MeasurementRecord& rec) {
  MagicSquareGameRecord r;
  r.variation = game.variation;
  r.j = game.j;
  r.k = game.k;
  auto fill = [&](const std::array<CellReadout, 3>& cells,
                  std::array<int, 3>& vals, int inferred_product) {
    int prod = 1;
    int missing = -1;
    for (int i = 0; i < 3; ++i) {
      if (cells[i].inferred) {
        missing = i;
      } else {
        vals[i] = eigen(game.circuit, rec, cells[i]);
        prod *= vals[i];
      }
    }
    if (missing >= 0) vals[missing] = inferred_product * prod;
  };
  // Row products are +1, column products are -1.
  fill(game.alice, r.alice, +1);
  fill(game.bob, r.bob, -1);
  r.win = magic_square_win(r);
  return r;
}

bool magic_square_win(const MagicSquareGameRecord& r) {
  bool match = r.alice[r.k] == r.bob[r.j];
  if (r.variation == 1) return match;
  int row_prod = r.alice[0] * r.alice[1] * r.alice[2];
  int col_prod = r.bob[0] * r.bob[1] * r.bob[2];
  return match && row_prod == +1 && col_prod == -1;
}

MagicSquareGameRecord play_variation_1(int j, int k, const NoiseParams& p,
                                       const MechanismToggles& toggles,
                                       Rng& rng) {
  MagicSquareCircuit game = build_variation_1(j, k);
  MeasurementRecord rec = run_noisy(game.circuit, p, toggles, rng);
  return decode_magic_square(game, rec);
}

MagicSquareGameRecord play_variation_2(int j, int k, const NoiseParams& p,
                                       const MechanismToggles& toggles,
                                       Rng& rng) {
  MagicSquareCircuit game = build_variation_2(j, k);
  MeasurementRecord rec = run_noisy(game.circuit, p, toggles, rng);
  return decode_magic_square(game, rec);
}

ClassicalSearchResult optimal_classical_strategy() {
  // Four row triples with product +1, four column triples with product -1.
  std::array<std::array<int, 3>, 4> row_triples;
  std::array<std::array<int, 3>, 4> col_triples;
  for (int idx = 0; idx < 4; ++idx) {
    int a = (idx & 1) ? -1 : +1;
    int b = (idx & 2) ? -1 : +1;
    row_triples[idx] = {a, b, a * b};
    col_triples[idx] = {a, b, -a * b};
  }
  int best_wins = -1;
  size_t best_count = 0;
  std::array<int, 3> best_alice{}, best_bob{};
  for (int sa = 0; sa < 64; ++sa) {
    std::array<int, 3> ra = {sa & 3, (sa >> 2) & 3, (sa >> 4) & 3};
    for (int sb = 0; sb < 64; ++sb) {
      std::array<int, 3> cb = {sb & 3, (sb >> 2) & 3, (sb >> 4) & 3};
      int wins = 0;
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          wins += row_triples[ra[j]][k] == col_triples[cb[k]][j];
        }
      }
      if (wins > best_wins) {
        best_wins = wins;
        best_count = 1;
        best_alice = ra;
        best_bob = cb;
      } else if (wins == best_wins) {
        ++best_count;
      }
    }
  }
  ClassicalSearchResult res;
  res.win_probability = double(best_wins) / 9.0;
  res.num_optimal_pairs = best_count;
  for (int j = 0; j < 3; ++j) res.alice[j] = row_triples[best_alice[j]];
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) res.bob[j][k] = col_triples[best_bob[k]][j];
  }
  return res;
}

std::array<ErrorBudgetRow, 4> magic_square_error_budget(int variation,
                                                        const NoiseParams& p,
                                                        size_t shots_per_game,
                                                        uint64_t seed) {
  if (variation != 1 && variation != 2) {
    throw std::invalid_argument("variation must be 1 or 2");
  }
  const std::array<std::pair<std::string, MechanismToggles>, 4> mechanisms = {
      std::make_pair(std::string("all"), MechanismToggles::all()),
      std::make_pair(std::string("sq"), MechanismToggles::only_sq()),
      std::make_pair(std::string("2q"), MechanismToggles::only_2q()),
      std::make_pair(std::string("readout"), MechanismToggles::only_readout()),
  };
  std::array<ErrorBudgetRow, 4> out;
  for (size_t m = 0; m < mechanisms.size(); ++m) {
    size_t wins = 0;
    size_t total = 0;
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        MagicSquareCircuit game = variation == 1 ? build_variation_1(j, k)
                                                 : build_variation_2(j, k);
        Rng rng = make_rng(seed, m, static_cast<uint64_t>(3 * j + k));
        for (size_t s = 0; s < shots_per_game; ++s) {
          MeasurementRecord rec =
              run_noisy(game.circuit, p, mechanisms[m].second, rng);
          wins += decode_magic_square(game, rec).win;
          ++total;
        }
      }
    }
    double rate = double(wins) / double(total);
    out[m] = {mechanisms[m].first, rate, 1.0 - rate};
  }
  return out;
}

}  // namespace ctx
