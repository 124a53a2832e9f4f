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

#include "ctx/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace ctx {

bool Gf2Vec::dot(const Gf2Vec& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("vector size mismatch");
  uint64_t acc = 0;
  for (size_t k = 0; k < w_.size(); ++k) {
    acc ^= uint64_t(std::popcount(w_[k] & rhs.w_[k]));
  }
  return acc & 1;
}

bool Gf2Vec::is_zero() const {
  for (uint64_t w : w_) {
    if (w) return false;
  }
  return true;
}

Gf2Mat::Gf2Mat(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows, Gf2Vec(cols)) {}

Gf2Vec Gf2Mat::mul(const Gf2Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
  Gf2Vec y(rows_);
  for (size_t r = 0; r < rows_; ++r) y.set(r, data_[r].dot(x));
  return y;
}

size_t Gf2Mat::rank() const {
  std::vector<Gf2Vec> m = data_;
  size_t rank = 0;
  for (size_t c = 0; c < cols_ && rank < rows_; ++c) {
    size_t pivot = rank;
    while (pivot < rows_ && !m[pivot].get(c)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = 0; r < rows_; ++r) {
      if (r != rank && m[r].get(c)) m[r] ^= m[rank];
    }
    ++rank;
  }
  return rank;
}

std::vector<Gf2Vec> Gf2Mat::null_space() const {
  // Reduced row echelon form, then one basis vector per free column.
  std::vector<Gf2Vec> m = data_;
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < cols_ && rank < rows_; ++c) {
    size_t pivot = rank;
    while (pivot < rows_ && !m[pivot].get(c)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = 0; r < rows_; ++r) {
      if (r != rank && m[r].get(c)) m[r] ^= m[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(cols_, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<Gf2Vec> basis;
  for (size_t fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    Gf2Vec b(cols_);
    b.set(fc, true);
    for (size_t r = 0; r < rank; ++r) {
      if (m[r].get(fc)) b.set(pivot_col[r], true);
    }
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace ctx
