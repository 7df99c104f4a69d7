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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sinit/protocols.hpp"
#include "sinit/schedule.hpp"
#include "sinit/spectrum.hpp"
#include "sinit/spin_system.hpp"

namespace sinit {

/// Any config problem. The message names the offending field as a dotted
/// path (e.g. "system.couplings"), or carries line/column for parse errors.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sweepable parameters: lock_duration, ts, t1, t_lock_coh, cnot_fidelity,
/// hadamard_fidelity.
struct SweepSpec {
  std::string parameter;
  int index = 0;  // 1-based lock number for lock_duration; 0 means every lock
  std::vector<double> values;
};

struct OutputSpec {
  std::filesystem::path directory = "sinit-out";
  bool snapshots = true;
  bool spectra = false;
  SpectrumOptions spectrum;
};

struct RunConfig {
  std::optional<std::string> preset;
  SpinSystem system;
  RelaxationModel model;
  Schedule schedule;
  ProtocolOptions options;
  std::optional<SweepSpec> sweep;
  OutputSpec output;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Config for a shipped preset with default options and no sweep.
RunConfig preset_config(const std::string& name);

/// Fully resolved config as pretty-printed JSON (loads back to the same run).
std::string to_json(const RunConfig& config);

/// Replaces the model with the perfect-filter limit and forces ideal gates.
void make_ideal(RunConfig& config);

/// Copy of `config` with the sweep parameter set to `value` and no sweep.
RunConfig with_sweep_value(const RunConfig& config, double value);

}  // namespace sinit
