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

#include "ctx/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ctx {

SummaryStats binomial_stats(size_t successes, size_t total) {
  if (total == 0) throw std::invalid_argument("empty sample");
  double p = double(successes) / double(total);
  return {p, std::sqrt(p * (1.0 - p) / double(total)), total, "binomial"};
}

SummaryStats ensemble_stats(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("empty ensemble");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= double(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  double sd = values.size() > 1 ? std::sqrt(ss / double(values.size() - 1))
                                : 0.0;
  return {mean, sd / std::sqrt(double(values.size())), values.size(),
          "ensemble"};
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& columns)
    : path_(path), num_columns_(columns.size()) {
  if (columns.empty()) throw std::invalid_argument("CSV needs columns");
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += columns[i];
  }
  buffer_ += '\n';
}

CsvWriter::~CsvWriter() {
  try {
    close();
  } catch (...) {
  }
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != num_columns_) {
    throw std::invalid_argument("CSV row width mismatch in " + path_);
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += cells[i];
  }
  buffer_ += '\n';
}

void CsvWriter::close() {
  if (closed_) return;
  closed_ = true;
  std::ofstream f(path_, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path_);
  f << buffer_;
}

std::string csv_cell(double v) { return format_value(v); }
std::string csv_cell(size_t v) { return std::to_string(v); }
std::string csv_cell(int v) { return std::to_string(v); }

}  // namespace ctx
