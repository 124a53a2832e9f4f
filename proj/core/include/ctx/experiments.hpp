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

#ifndef CTX_EXPERIMENTS_HPP
#define CTX_EXPERIMENTS_HPP

#include <functional>
#include <string>
#include <vector>

#include "ctx/config.hpp"

namespace ctx {

/// Index-parallel loop with deterministic result slots: fn(i) may run on
/// any thread, but everything it writes is keyed by i, so outputs are
/// independent of the thread count.
void parallel_for(size_t count, size_t threads,
                  const std::function<void(size_t)>& fn);

struct RunArtifacts {
  std::vector<std::string> files;
};

/// Runs the configured experiment and writes its CSVs and SVG plot under
/// cfg.out_dir. Identical config (including seed) yields byte-identical
/// CSVs regardless of cfg.threads.
RunArtifacts run_experiment(const RunConfig& cfg);

}  // namespace ctx

#endif  // CTX_EXPERIMENTS_HPP
