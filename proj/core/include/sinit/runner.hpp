// Copyright 2026 The sinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sinit/config.hpp"
#include "sinit/protocols.hpp"

namespace sinit {

struct PointResult {
  std::optional<double> sweep_value;
  ProtocolResult result;
};

/// Runs the protocol once, or once per grid point when the config has a
/// sweep. Points run concurrently; results come back in grid order.
std::vector<PointResult> execute(const RunConfig& config);

/// Executes and writes artifacts under `out` (the config's directory when
/// empty):
///   metrics.csv            one row per point
///   resolved_config.json   the fully resolved config
///   [point_NNN/]final_state.txt, populations.csv, snapshots/, spectra/
/// Returns the directory written.
std::filesystem::path run(const RunConfig& config, const std::filesystem::path& out = {});

std::string metrics_csv(const RunConfig& config, const std::vector<PointResult>& points);

}  // namespace sinit
