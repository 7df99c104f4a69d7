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

#include <map>
#include <string>
#include <vector>

#include "sinit/relaxation.hpp"
#include "sinit/schedule.hpp"
#include "sinit/spin_system.hpp"

namespace sinit {

/// A molecule plus protocol. Shifts and couplings are placeholders (the
/// published values are only given graphically) and are meant to be
/// replaced from a config; nothing downstream depends on them.
struct Preset {
  std::string name;
  std::string description;
  SpinSystem system;
  RelaxationModel model;
  Schedule schedule;
  std::map<std::string, std::string> metadata;
};

std::vector<std::string> preset_names();

/// Throws std::invalid_argument listing the known names if `name` is unknown.
Preset make_preset(const std::string& name);

}  // namespace sinit
