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

#ifndef CTX_GRID_HPP
#define CTX_GRID_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace ctx {

/// Rectangular nearest-neighbor grid with an optional row-major truncation:
/// the first `active` cells (row-major) are live qubits, the rest are
/// defects. Truncating row-major keeps the live region connected, so any
/// qubit count embeds into a near-square grid.
class GridGraph {
 public:
  GridGraph(size_t rows, size_t cols);
  GridGraph(size_t rows, size_t cols, size_t active);

  /// Smallest near-square grid holding n active qubits.
  static GridGraph square_for(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t num_active() const { return active_; }

  bool is_active(size_t r, size_t c) const {
    return r < rows_ && c < cols_ && r * cols_ + c < active_;
  }
  size_t node(size_t r, size_t c) const { return r * cols_ + c; }
  std::pair<size_t, size_t> coord(size_t q) const {
    return {q / cols_, q % cols_};
  }

  /// Active Manhattan-distance-1 neighbors of active node q.
  std::vector<size_t> neighbors(size_t q) const;

  /// Node nearest the grid centroid; default BFS growth root.
  size_t center_node() const;

  bool is_connected() const;

 private:
  size_t rows_;
  size_t cols_;
  size_t active_;
};

}  // namespace ctx

#endif  // CTX_GRID_HPP
