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

#ifndef CTX_GF2_HPP
#define CTX_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ctx {

/// Bit-vector over GF(2), packed into 64-bit words.
class Gf2Vec {
 public:
  Gf2Vec() = default;
  explicit Gf2Vec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    if (v) {
      w_[i >> 6] |= uint64_t{1} << (i & 63);
    } else {
      w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
  }
  void operator^=(const Gf2Vec& rhs) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= rhs.w_[k];
  }
  bool dot(const Gf2Vec& rhs) const;
  bool is_zero() const;
  bool operator==(const Gf2Vec& rhs) const {
    return n_ == rhs.n_ && w_ == rhs.w_;
  }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

/// Row-major bit matrix over GF(2).
class Gf2Mat {
 public:
  Gf2Mat() = default;
  Gf2Mat(size_t rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool get(size_t r, size_t c) const { return data_[r].get(c); }
  void set(size_t r, size_t c, bool v) { data_[r].set(c, v); }
  const Gf2Vec& row(size_t r) const { return data_[r]; }

  Gf2Vec mul(const Gf2Vec& x) const;

  /// Rank via Gaussian elimination (input untouched).
  size_t rank() const;

  /// Basis of the right null space; size = cols - rank.
  std::vector<Gf2Vec> null_space() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Gf2Vec> data_;
};

}  // namespace ctx

#endif  // CTX_GF2_HPP
