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

#ifndef CTX_REPORT_HPP
#define CTX_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace ctx {

struct SummaryStats {
  double mean;
  double sigma;
  size_t count;
  std::string sigma_kind;  // "binomial" or "ensemble"
};

/// sqrt(p(1-p)/n) standard error of a success fraction.
SummaryStats binomial_stats(size_t successes, size_t total);

/// Mean with SD/sqrt(n) standard error over replicate values.
SummaryStats ensemble_stats(const std::vector<double>& values);

/// Deterministic decimal rendering used in every CSV cell, so identical
/// results produce identical bytes.
std::string format_value(double v);

/// Minimal CSV sink with a fixed column schema.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns);
  ~CsvWriter();

  void add_row(const std::vector<std::string>& cells);
  void close();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  size_t num_columns_;
  std::string buffer_;
  bool closed_ = false;
};

std::string csv_cell(double v);
std::string csv_cell(size_t v);
std::string csv_cell(int v);

}  // namespace ctx

#endif  // CTX_REPORT_HPP
