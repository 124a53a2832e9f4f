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

#include "ctx/hlf.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ctx {

namespace {

/// Grid edges (i < j) with their direction color: 0/1 horizontal by column
/// parity, 2/3 vertical by row parity. Each color class is vertex-disjoint,
/// so it fits one CZ moment.
std::vector<std::pair<std::pair<size_t, size_t>, int>> colored_edges(
    const GridGraph& g) {
  std::vector<std::pair<std::pair<size_t, size_t>, int>> edges;
  for (size_t q = 0; q < g.num_active(); ++q) {
    auto [r, c] = g.coord(q);
    if (c + 1 < g.cols() && g.is_active(r, c + 1)) {
      edges.push_back({{q, g.node(r, c + 1)}, int(c % 2)});
    }
    if (r + 1 < g.rows() && g.is_active(r + 1, c)) {
      edges.push_back({{q, g.node(r + 1, c)}, 2 + int(r % 2)});
    }
  }
  return edges;
}

Rng verify_rng(const HlfInstance& inst) {
  // Deterministic stream so verification is a pure function.
  return make_rng(0x484c4656ull, inst.n(), inst.seed);
}

bool check_z_on_kernel_vec(const HlfInstance& inst, const Gf2Vec& z,
                           const Gf2Vec& v) {
  int q = quadratic_form(inst.a, v);
  int rhs = 2 * int(z.dot(v));
  return q == rhs;
}

}  // namespace

HlfInstance random_instance(const GridGraph& g, double p_gate, Rng& rng) {
  if (p_gate < 0.0 || p_gate > 1.0) {
    throw std::invalid_argument("p_gate outside [0, 1]");
  }
  HlfInstance inst;
  inst.grid = g;
  inst.p_gate = p_gate;
  const size_t n = g.num_active();
  inst.a = Gf2Mat(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (random_unit(rng) < p_gate) inst.a.set(i, i, true);
  }
  for (const auto& [edge, color] : colored_edges(g)) {
    (void)color;
    if (random_unit(rng) < p_gate) {
      inst.a.set(edge.first, edge.second, true);
      inst.a.set(edge.second, edge.first, true);
    }
  }
  return inst;
}

int quadratic_form(const Gf2Mat& a, const Gf2Vec& x) {
  if (a.rows() != x.size() || a.cols() != x.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  int acc = 0;
  for (size_t i = 0; i < a.rows(); ++i) {
    if (!x.get(i)) continue;
    if (a.get(i, i)) acc += 1;
    for (size_t j = i + 1; j < a.cols(); ++j) {
      if (x.get(j) && a.get(i, j)) acc += 2;
    }
  }
  return acc & 3;
}

Circuit build_hlf_circuit(const HlfInstance& inst) {
  const size_t n = inst.n();
  Circuit c(n);
  for (size_t q = 0; q < n; ++q) c.append(GateKind::H, q);
  for (size_t q = 0; q < n; ++q) {
    if (inst.a.get(q, q)) c.append(GateKind::S, q);
  }
  auto edges = colored_edges(inst.grid);
  for (int color = 0; color < 4; ++color) {
    bool any = false;
    for (const auto& [edge, ec] : edges) {
      if (ec != color || !inst.a.get(edge.first, edge.second)) continue;
      if (!any) {
        c.barrier();
        any = true;
      }
      c.append(GateKind::CZ, edge.first, edge.second);
    }
  }
  c.barrier();
  for (size_t q = 0; q < n; ++q) c.append(GateKind::H, q);
  for (size_t q = 0; q < n; ++q) c.measure(q, "m" + std::to_string(q));
  return c;
}

std::vector<Gf2Vec> solve(const HlfInstance& inst, const NoiseParams& p,
                          const MechanismToggles& toggles, size_t shots,
                          Rng& rng) {
  Circuit c = build_hlf_circuit(inst);
  const size_t n = inst.n();
  std::vector<Gf2Vec> out;
  out.reserve(shots);
  for (size_t s = 0; s < shots; ++s) {
    MeasurementRecord rec = run_noisy(c, p, toggles, rng);
    Gf2Vec z(n);
    for (size_t q = 0; q < n; ++q) z.set(q, rec[q]);
    out.push_back(std::move(z));
  }
  return out;
}

bool verify_solution(const HlfInstance& inst, const Gf2Vec& z) {
  if (z.size() != inst.n()) throw std::invalid_argument("z size mismatch");
  std::vector<Gf2Vec> basis = inst.a.null_space();
  for (const Gf2Vec& b : basis) {
    if (!check_z_on_kernel_vec(inst, z, b)) return false;
  }
  if (basis.empty()) return true;
  Rng rng = verify_rng(inst);
  for (int trial = 0; trial < 32; ++trial) {
    Gf2Vec v(inst.n());
    for (const Gf2Vec& b : basis) {
      if (random_bit(rng)) v ^= b;
    }
    if (!check_z_on_kernel_vec(inst, z, v)) return false;
  }
  return true;
}

std::vector<Gf2Vec> brute_force_solutions(const HlfInstance& inst) {
  const size_t n = inst.n();
  if (n > 16) throw std::invalid_argument("brute force limited to n <= 16");
  std::vector<Gf2Vec> basis = inst.a.null_space();
  if (basis.size() > 20) {
    throw std::invalid_argument("kernel too large for brute force");
  }
  // Every kernel vector with its q value, once.
  std::vector<std::pair<Gf2Vec, int>> kernel;
  kernel.reserve(size_t{1} << basis.size());
  for (size_t mask = 0; mask < (size_t{1} << basis.size()); ++mask) {
    Gf2Vec v(n);
    for (size_t b = 0; b < basis.size(); ++b) {
      if ((mask >> b) & 1) v ^= basis[b];
    }
    kernel.emplace_back(v, quadratic_form(inst.a, v));
  }
  std::vector<Gf2Vec> valid;
  for (size_t zm = 0; zm < (size_t{1} << n); ++zm) {
    Gf2Vec z(n);
    for (size_t q = 0; q < n; ++q) z.set(q, (zm >> q) & 1);
    bool ok = true;
    for (const auto& [v, qv] : kernel) {
      if (qv != 2 * int(z.dot(v))) {
        ok = false;
        break;
      }
    }
    if (ok) valid.push_back(std::move(z));
  }
  return valid;
}

double classical_depth_bound(const GridGraph& g) {
  size_t edges = colored_edges(g).size();
  return std::log2(double(edges + g.num_active()));
}

double effective_depth(double fraction_correct) {
  if (fraction_correct <= 0.0 || fraction_correct > 1.0) {
    throw std::invalid_argument("fraction outside (0, 1]");
  }
  return 4.0 / fraction_correct;
}

double tts(double physical_depth, double p_success) {
  if (p_success <= 0.0 || p_success > 1.0) {
    throw std::invalid_argument("p_success outside (0, 1]");
  }
  return physical_depth / p_success;
}

double bravyi_bound_extrapolation(size_t n, double c) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (c < 0.0) throw std::invalid_argument("c must be >= 0");
  return c * std::log2(double(n)) / 16.0;
}

void save_instance(const HlfInstance& inst, std::ostream& out) {
  std::ostringstream header;
  header << inst.grid.rows() << ' ' << inst.grid.cols() << ' '
         << std::setprecision(17) << inst.p_gate << ' ' << inst.seed;
  // Truncated grids carry the active count as an extra header token.
  if (inst.n() < inst.grid.rows() * inst.grid.cols()) {
    header << ' ' << inst.n();
  }
  out << header.str() << '\n';
  for (size_t i = 0; i < inst.n(); ++i) {
    for (size_t j = i; j < inst.n(); ++j) {
      if (inst.a.get(i, j)) out << i << ' ' << j << '\n';
    }
  }
}

HlfInstance load_instance(std::istream& in) {
  std::string header_line;
  if (!std::getline(in, header_line)) {
    throw std::runtime_error("malformed instance header");
  }
  std::istringstream header(header_line);
  size_t rows, cols;
  double p_gate;
  uint64_t seed;
  if (!(header >> rows >> cols >> p_gate >> seed)) {
    throw std::runtime_error("malformed instance header");
  }
  size_t active = rows * cols;
  header >> active;
  HlfInstance inst;
  inst.grid = GridGraph(rows, cols, active);
  inst.p_gate = p_gate;
  inst.seed = seed;
  const size_t n = inst.n();
  inst.a = Gf2Mat(n, n);
  size_t i, j;
  while (in >> i >> j) {
    if (i >= n || j >= n) throw std::runtime_error("entry index out of range");
    inst.a.set(i, j, true);
    inst.a.set(j, i, true);
  }
  return inst;
}

void save_instance_file(const HlfInstance& inst, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  save_instance(inst, f);
}

HlfInstance load_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return load_instance(f);
}

}  // namespace ctx
