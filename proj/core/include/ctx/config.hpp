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

#ifndef CTX_CONFIG_HPP
#define CTX_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctx/noise.hpp"

namespace ctx {

/// Parse/validation failure; what() carries the offending key and line.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Flat key=value experiment configuration. Every run is fully seeded;
/// there is no wall-clock entropy anywhere.
struct RunConfig {
  std::string experiment;  // magic_square | ksb | ghz_game | hlf
  uint64_t seed = 1;
  size_t threads = 1;
  std::string out_dir = "out";

  NoiseParams noise;
  MechanismToggles toggles;

  // games
  int variation = 1;
  size_t shots = 1000;

  // ksb
  size_t contexts = 180;
  std::string ksb_init = "zero";  // zero | plus | bell

  // ghz_game
  std::vector<size_t> ghz_n = {12};
  size_t question_sets = 20;
  size_t growth_patterns = 50;
  size_t m_stabilizers = 200;

  // hlf
  size_t rows = 3;
  size_t cols = 3;
  size_t active = 0;  // 0 means rows*cols
  double p_gate = 0.5;
  size_t instances = 1000;
};

/// Parses the key=value text ('#' comments). Unknown keys, bad types, and
/// out-of-range values raise ConfigError naming the key.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace ctx

#endif  // CTX_CONFIG_HPP
