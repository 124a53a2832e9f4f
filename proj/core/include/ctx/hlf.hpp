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

#ifndef CTX_HLF_HPP
#define CTX_HLF_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ctx/circuit.hpp"
#include "ctx/gf2.hpp"
#include "ctx/grid.hpp"
#include "ctx/noise.hpp"
#include "ctx/rng.hpp"

namespace ctx {

/// A 2D hidden-linear-function instance: symmetric bit matrix A supported
/// on the grid's diagonal and nearest-neighbor edges, defining
/// q(x) = x^T A x (mod 4).
struct HlfInstance {
  GridGraph grid{1, 1};
  double p_gate = 0.5;
  uint64_t seed = 0;
  Gf2Mat a;

  size_t n() const { return grid.num_active(); }
};

/// Each diagonal and grid-edge entry set independently with probability
/// p_gate.
HlfInstance random_instance(const GridGraph& g, double p_gate, Rng& rng);

/// q(x) = sum_i A_ii x_i + 2 sum_{i<j} A_ij x_i x_j (mod 4).
int quadratic_form(const Gf2Mat& a, const Gf2Vec& x);

/// H everywhere, S on the diagonal support, the CZ support scheduled into
/// the four lattice direction classes (at most 4 two-qubit moments), H
/// everywhere, measure all (keys "m<q>").
Circuit build_hlf_circuit(const HlfInstance& inst);

/// One candidate z per shot (bit q from qubit q).
std::vector<Gf2Vec> solve(const HlfInstance& inst, const NoiseParams& p,
                          const MechanismToggles& toggles, size_t shots,
                          Rng& rng);

/// Checks q(b) == 2 z.b (mod 4) on every kernel basis vector plus 32
/// random kernel combinations.
bool verify_solution(const HlfInstance& inst, const Gf2Vec& z);

/// Every valid z, each tested against the full kernel. Requires n <= 16
/// and kernel dimension <= 20.
std::vector<Gf2Vec> brute_force_solutions(const HlfInstance& inst);

/// Conjectured classical layer lower bound log2(edges + nodes).
double classical_depth_bound(const GridGraph& g);

/// 4 / fraction_correct. fraction must be in (0, 1].
double effective_depth(double fraction_correct);

/// Time-to-solution style effective depth: physical depth / p_success.
double tts(double physical_depth, double p_success);

/// Parameterized extrapolated bound c * log2(n) / 16.
double bravyi_bound_extrapolation(size_t n, double c);

/// Text format: "rows cols p_gate seed" header then one "i j" line per
/// nonzero entry with i <= j. Round-trips bit-exactly.
void save_instance(const HlfInstance& inst, std::ostream& out);
HlfInstance load_instance(std::istream& in);
void save_instance_file(const HlfInstance& inst, const std::string& path);
HlfInstance load_instance_file(const std::string& path);

}  // namespace ctx

#endif  // CTX_HLF_HPP
