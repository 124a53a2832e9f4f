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

#include "ctx/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ctx {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& key,
                       const std::string& what) {
  std::ostringstream os;
  os << "config line " << line << ", key '" << key << "': " << what;
  throw ConfigError(os.str());
}

uint64_t parse_u64(int line, const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    uint64_t r = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    fail(line, key, "expected an unsigned integer, got '" + v + "'");
  }
}

size_t parse_count(int line, const std::string& key, const std::string& v) {
  uint64_t r = parse_u64(line, key, v);
  if (r == 0) fail(line, key, "must be >= 1");
  return static_cast<size_t>(r);
}

double parse_double(int line, const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double r = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    fail(line, key, "expected a number, got '" + v + "'");
  }
}

double parse_prob(int line, const std::string& key, const std::string& v) {
  double r = parse_double(line, key, v);
  if (r < 0.0 || r > 1.0) fail(line, key, "must lie in [0, 1]");
  return r;
}

bool parse_bool(int line, const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  fail(line, key, "expected a boolean, got '" + v + "'");
}

std::vector<size_t> parse_count_list(int line, const std::string& key,
                                     const std::string& v) {
  std::vector<size_t> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_count(line, key, trim(item)));
  }
  if (out.empty()) fail(line, key, "expected a comma-separated list");
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool saw_experiment = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream os;
      os << "config line " << line_no << ": expected key=value, got '" << line
         << "'";
      throw ConfigError(os.str());
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    int ln = line_no;

    if (key == "experiment") {
      if (value != "magic_square" && value != "ksb" && value != "ghz_game" &&
          value != "hlf") {
        fail(ln, key, "unknown experiment '" + value + "'");
      }
      cfg.experiment = value;
      saw_experiment = true;
    } else if (key == "seed") {
      cfg.seed = parse_u64(ln, key, value);
    } else if (key == "threads") {
      cfg.threads = parse_count(ln, key, value);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else if (key == "e_p_sq") {
      cfg.noise.e_p_sq = parse_prob(ln, key, value);
    } else if (key == "e_p_2q") {
      cfg.noise.e_p_2q = parse_prob(ln, key, value);
    } else if (key == "e0") {
      cfg.noise.e0 = parse_prob(ln, key, value);
    } else if (key == "e1") {
      cfg.noise.e1 = parse_prob(ln, key, value);
    } else if (key == "epsilon") {
      double eps = parse_prob(ln, key, value);
      cfg.noise.e0 = eps;
      cfg.noise.e1 = eps;
    } else if (key == "t1_us") {
      cfg.noise.t1 = parse_double(ln, key, value);
      if (cfg.noise.t1 < 0.0) fail(ln, key, "must be >= 0");
    } else if (key == "moment_ns") {
      cfg.noise.moment_duration_ns = parse_double(ln, key, value);
      if (cfg.noise.moment_duration_ns <= 0.0) fail(ln, key, "must be > 0");
    } else if (key == "noise_sq") {
      cfg.toggles.sq = parse_bool(ln, key, value);
    } else if (key == "noise_2q") {
      cfg.toggles.twoq = parse_bool(ln, key, value);
    } else if (key == "noise_readout") {
      cfg.toggles.readout = parse_bool(ln, key, value);
    } else if (key == "variation") {
      uint64_t v = parse_u64(ln, key, value);
      if (v != 1 && v != 2) fail(ln, key, "must be 1 or 2");
      cfg.variation = int(v);
    } else if (key == "shots") {
      cfg.shots = parse_count(ln, key, value);
    } else if (key == "contexts") {
      cfg.contexts = parse_count(ln, key, value);
    } else if (key == "ksb_init") {
      if (value != "zero" && value != "plus" && value != "bell") {
        fail(ln, key, "must be zero, plus, or bell");
      }
      cfg.ksb_init = value;
    } else if (key == "N") {
      cfg.ghz_n = parse_count_list(ln, key, value);
      for (size_t n : cfg.ghz_n) {
        if (n < 2) fail(ln, key, "every N must be >= 2");
      }
    } else if (key == "question_sets") {
      cfg.question_sets = parse_count(ln, key, value);
    } else if (key == "growth_patterns") {
      cfg.growth_patterns = parse_count(ln, key, value);
    } else if (key == "m_stabilizers") {
      cfg.m_stabilizers = parse_count(ln, key, value);
    } else if (key == "rows") {
      cfg.rows = parse_count(ln, key, value);
    } else if (key == "cols") {
      cfg.cols = parse_count(ln, key, value);
    } else if (key == "active") {
      cfg.active = parse_count(ln, key, value);
    } else if (key == "p_gate") {
      cfg.p_gate = parse_prob(ln, key, value);
    } else if (key == "instances") {
      cfg.instances = parse_count(ln, key, value);
    } else {
      fail(ln, key, "unknown key");
    }
  }
  if (!saw_experiment) {
    throw ConfigError("config is missing the required 'experiment' key");
  }
  if (cfg.active > cfg.rows * cfg.cols) {
    throw ConfigError("key 'active': exceeds rows*cols");
  }
  if (!cfg.noise.valid()) {
    throw ConfigError("noise parameters failed validation");
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str());
}

}  // namespace ctx
