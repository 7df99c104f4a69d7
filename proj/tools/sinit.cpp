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

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sinit/config.hpp"
#include "sinit/matrix_io.hpp"
#include "sinit/presets.hpp"
#include "sinit/runner.hpp"

namespace {

struct Flags {
  std::string config;
  std::string out;
  bool strict_gradient = false;
  bool ideal = false;
};

void add_run_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("config", f.config, "JSON run configuration")->required();
  cmd->add_option("--out", f.out, "output directory (overrides output.directory)");
  cmd->add_flag("--strict-gradient", f.strict_gradient, "gradient removes every off-diagonal element");
  cmd->add_flag("--ideal", f.ideal, "perfect singlet filter and ideal gates");
}

sinit::RunConfig load(const Flags& f) {
  auto cfg = sinit::load_config(f.config);
  if (f.strict_gradient) cfg.options.strict_gradient = true;
  if (f.ideal) sinit::make_ideal(cfg);
  return cfg;
}

int run(const Flags& f, bool require_sweep) {
  const auto cfg = load(f);
  if (require_sweep && !cfg.sweep) throw sinit::ConfigError("config error at sweep: missing required field");
  const auto dir = sinit::run(cfg, f.out);
  std::ifstream metrics(dir / "metrics.csv");
  std::cout << metrics.rdbuf();
  std::cerr << "wrote " << dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sinit: singlet-based initialization of spin registers"};
  app.require_subcommand(1);

  Flags run_flags, sweep_flags, validate_flags;
  auto* run_cmd = app.add_subcommand("run", "run a protocol (or its sweep) and write artifacts");
  add_run_flags(run_cmd, run_flags);
  auto* sweep_cmd = app.add_subcommand("sweep", "run the config's parameter sweep");
  add_run_flags(sweep_cmd, sweep_flags);
  auto* validate_cmd = app.add_subcommand("validate", "check a config and print it with defaults resolved");
  add_run_flags(validate_cmd, validate_flags);
  auto* presets_cmd = app.add_subcommand("presets", "shipped molecule presets");
  presets_cmd->require_subcommand(1);
  auto* list_cmd = presets_cmd->add_subcommand("list", "list preset names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return run(run_flags, false);
    if (sweep_cmd->parsed()) return run(sweep_flags, true);
    if (validate_cmd->parsed()) {
      std::cout << sinit::to_json(load(validate_flags));
      return 0;
    }
    if (list_cmd->parsed()) {
      for (const auto& name : sinit::preset_names()) {
        std::cout << name << "\t" << sinit::make_preset(name).description << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "sinit: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
