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

#include "ctx/grid.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace ctx {

GridGraph::GridGraph(size_t rows, size_t cols)
    : GridGraph(rows, cols, rows * cols) {}

GridGraph::GridGraph(size_t rows, size_t cols, size_t active)
    : rows_(rows), cols_(cols), active_(active) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("grid needs positive dimensions");
  }
  if (active == 0 || active > rows * cols) {
    throw std::invalid_argument("active count outside [1, rows*cols]");
  }
}

GridGraph GridGraph::square_for(size_t n) {
  if (n == 0) throw std::invalid_argument("grid needs at least one qubit");
  size_t cols = static_cast<size_t>(std::ceil(std::sqrt(double(n))));
  size_t rows = (n + cols - 1) / cols;
  return GridGraph(rows, cols, n);
}

std::vector<size_t> GridGraph::neighbors(size_t q) const {
  if (q >= active_) throw std::out_of_range("node index out of range");
  auto [r, c] = coord(q);
  std::vector<size_t> out;
  if (r > 0 && is_active(r - 1, c)) out.push_back(node(r - 1, c));
  if (c > 0 && is_active(r, c - 1)) out.push_back(node(r, c - 1));
  if (c + 1 < cols_ && is_active(r, c + 1)) out.push_back(node(r, c + 1));
  if (r + 1 < rows_ && is_active(r + 1, c)) out.push_back(node(r + 1, c));
  return out;
}

size_t GridGraph::center_node() const {
  size_t rows_eff = (active_ + cols_ - 1) / cols_;
  double tr = (double(rows_eff) - 1.0) / 2.0;
  double tc = (double(cols_) - 1.0) / 2.0;
  size_t best = 0;
  double best_d = 1e300;
  for (size_t q = 0; q < active_; ++q) {
    auto [r, c] = coord(q);
    double d = (double(r) - tr) * (double(r) - tr) +
               (double(c) - tc) * (double(c) - tc);
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

bool GridGraph::is_connected() const {
  std::vector<char> seen(active_, 0);
  std::queue<size_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  size_t count = 1;
  while (!frontier.empty()) {
    size_t q = frontier.front();
    frontier.pop();
    for (size_t nb : neighbors(q)) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++count;
        frontier.push(nb);
      }
    }
  }
  return count == active_;
}

}  // namespace ctx
