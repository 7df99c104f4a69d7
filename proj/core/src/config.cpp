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

#include "sinit/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sinit/matrix_io.hpp"
#include "sinit/presets.hpp"

namespace sinit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config error at " + path + ": " + what);
}

std::string join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

void allow_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  const std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items()) {
    if (!ok.count(k)) fail(join(path, k), "unknown field");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) fail(join(path, key), "missing required field");
  return obj.at(key);
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path, "must be finite");
  return d;
}

// Time constants may be given as the string "inf".
double time_constant(const json& v, const std::string& path) {
  if (v.is_string() && v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  const double d = number(v, path);
  if (!(d > 0.0)) fail(path, "must be > 0");
  return d;
}

json time_json(double v) { return std::isinf(v) ? json("inf") : json(v); }

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

bool boolean(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

std::string text(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<double> numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], at(path, i)));
  return out;
}

SpinPair pair(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) fail(path, "expected a pair [a, b]");
  return {integer(v[0], at(path, 0)), integer(v[1], at(path, 1))};
}

std::vector<SpinPair> pairs(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array of pairs");
  std::vector<SpinPair> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(pair(v[i], at(path, i)));
  return out;
}

std::vector<int> ints(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array of spin indices");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], at(path, i)));
  return out;
}

json pair_json(const SpinPair& p) { return json::array({p.first, p.second}); }

template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

SpinSystem parse_system(const json& j, const std::string& path) {
  allow_keys(j, path, {"shifts", "couplings", "epsilon"});
  const auto shifts = numbers(require(j, "shifts", path), join(path, "shifts"));
  const std::size_t n = shifts.size();
  if (n < 1) fail(join(path, "shifts"), "needs at least one spin");
  if (n > static_cast<std::size_t>(kMaxSpins)) {
    fail(join(path, "shifts"), "register of " + std::to_string(n) + " spins exceeds the " + std::to_string(kMaxSpins) +
                                   "-spin limit of the dense simulator");
  }
  const std::string cpath = join(path, "couplings");
  const json& c = require(j, "couplings", path);
  if (!c.is_array() || c.size() != n) fail(cpath, "expected an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  RealMatrix jm(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = numbers(c[r], at(cpath, r));
    if (row.size() != n) fail(at(cpath, r), "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) jm(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = row[k];
  }
  std::vector<double> eps(n, 1e-4);
  if (j.contains("epsilon")) eps = numbers(j["epsilon"], join(path, "epsilon"));
  return guarded(path, [&] { return SpinSystem(shifts, jm, eps); });
}

RelaxationModel parse_model(const json& j, const std::string& path, int n) {
  allow_keys(j, path, {"t1", "t2", "singlets"});
  const auto list = [&](const char* key) {
    std::vector<double> out;
    const json& v = j.at(key);
    const std::string p = join(path, key);
    if (!v.is_array()) fail(p, "expected an array");
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(time_constant(v[i], at(p, i)));
    if (static_cast<int>(out.size()) != n) fail(p, "expected one entry per spin (" + std::to_string(n) + ")");
    return out;
  };
  require(j, "t1", path);
  const auto t1 = list("t1");
  std::vector<double> t2;
  if (j.contains("t2")) t2 = list("t2");
  std::vector<SingletDecay> singlets;
  if (j.contains("singlets")) {
    const std::string sp = join(path, "singlets");
    const json& s = j["singlets"];
    if (!s.is_array()) fail(sp, "expected an array");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string ep = at(sp, i);
      allow_keys(s[i], ep, {"pair", "ts", "t_lock_coh"});
      SingletDecay d{pair(require(s[i], "pair", ep), join(ep, "pair")), time_constant(require(s[i], "ts", ep), join(ep, "ts")),
                     std::nullopt};
      if (s[i].contains("t_lock_coh")) d.t_lock_coh = time_constant(s[i]["t_lock_coh"], join(ep, "t_lock_coh"));
      singlets.push_back(d);
    }
  }
  return guarded(path, [&] { return RelaxationModel(t1, t2, singlets); });
}

ControlPolarity parse_polarity(const json& v, const std::string& path) {
  const auto s = text(v, path);
  if (s == "on-1") return ControlPolarity::on_one;
  if (s == "on-0") return ControlPolarity::on_zero;
  fail(path, "expected \"on-1\" or \"on-0\"");
}

Instruction parse_instruction(const json& j, const std::string& path) {
  const auto op = text(require(j, "op", path), join(path, "op"));
  const InstructionKind kind = guarded(join(path, "op"), [&] { return parse_instruction_kind(op); });
  Instruction ins;
  switch (kind) {
    case InstructionKind::prepare_singlet:
      allow_keys(j, path, {"op", "pairs", "label"});
      ins = Instruction::prepare_singlet(pairs(require(j, "pairs", path), join(path, "pairs")));
      break;
    case InstructionKind::lock: {
      allow_keys(j, path, {"op", "pairs", "duration", "amplitude", "sequence", "label"});
      const double dur = number(require(j, "duration", path), join(path, "duration"));
      const double amp = j.contains("amplitude") ? number(j["amplitude"], join(path, "amplitude")) : 0.0;
      LockSequence seq = LockSequence::cw;
      if (j.contains("sequence")) {
        const auto name = text(j["sequence"], join(path, "sequence"));
        seq = guarded(join(path, "sequence"), [&] { return parse_lock_sequence(name); });
      }
      ins = Instruction::lock(pairs(require(j, "pairs", path), join(path, "pairs")), dur, amp, seq);
      break;
    }
    case InstructionKind::convert:
      allow_keys(j, path, {"op", "pair", "label"});
      ins = Instruction::convert(pair(require(j, "pair", path), join(path, "pair")));
      break;
    case InstructionKind::cnot: {
      allow_keys(j, path, {"op", "control", "target", "polarity", "fidelity", "gate_duration", "label"});
      const auto pol = j.contains("polarity") ? parse_polarity(j["polarity"], join(path, "polarity")) : ControlPolarity::on_one;
      const double f = j.contains("fidelity") ? number(j["fidelity"], join(path, "fidelity")) : 1.0;
      ins = Instruction::controlled_not(integer(require(j, "control", path), join(path, "control")),
                                        integer(require(j, "target", path), join(path, "target")), pol, f);
      break;
    }
    case InstructionKind::hadamard: {
      allow_keys(j, path, {"op", "spin", "fidelity", "gate_duration", "label"});
      const double f = j.contains("fidelity") ? number(j["fidelity"], join(path, "fidelity")) : 1.0;
      ins = Instruction::hadamard(integer(require(j, "spin", path), join(path, "spin")), f);
      break;
    }
    case InstructionKind::not_gate:
      allow_keys(j, path, {"op", "spins", "label"});
      ins = Instruction::flip(ints(require(j, "spins", path), join(path, "spins")));
      break;
    case InstructionKind::bell: {
      allow_keys(j, path, {"op", "pair", "variant", "label"});
      const auto name = text(require(j, "variant", path), join(path, "variant"));
      const auto v = guarded(join(path, "variant"), [&] { return parse_bell_variant(name); });
      ins = Instruction::bell_rotation(pair(require(j, "pair", path), join(path, "pair")), v);
      break;
    }
    case InstructionKind::gradient:
      allow_keys(j, path, {"op", "label"});
      ins = Instruction::gradient();
      break;
    case InstructionKind::delay:
      allow_keys(j, path, {"op", "duration", "label"});
      ins = Instruction::delay(number(require(j, "duration", path), join(path, "duration")));
      break;
  }
  if (j.contains("gate_duration")) ins.gate_duration_s = number(j["gate_duration"], join(path, "gate_duration"));
  if (j.contains("label")) ins.label = text(j["label"], join(path, "label"));
  return ins;
}

json instruction_json(const Instruction& ins) {
  json j{{"op", to_string(ins.kind)}};
  switch (ins.kind) {
    case InstructionKind::prepare_singlet:
    case InstructionKind::lock: {
      json ps = json::array();
      for (const auto& p : ins.pairs) ps.push_back(pair_json(p));
      j["pairs"] = ps;
      if (ins.kind == InstructionKind::lock) {
        j["duration"] = ins.duration_s;
        j["amplitude"] = ins.amplitude_hz;
        j["sequence"] = to_string(ins.sequence);
      }
      break;
    }
    case InstructionKind::convert:
      j["pair"] = pair_json(ins.pairs[0]);
      break;
    case InstructionKind::cnot:
      j["control"] = ins.spins[0];
      j["target"] = ins.spins[1];
      j["polarity"] = ins.polarity == ControlPolarity::on_one ? "on-1" : "on-0";
      j["fidelity"] = ins.fidelity;
      j["gate_duration"] = ins.gate_duration_s;
      break;
    case InstructionKind::hadamard:
      j["spin"] = ins.spins[0];
      j["fidelity"] = ins.fidelity;
      j["gate_duration"] = ins.gate_duration_s;
      break;
    case InstructionKind::not_gate:
      j["spins"] = ins.spins;
      break;
    case InstructionKind::bell:
      j["pair"] = pair_json(ins.pairs[0]);
      j["variant"] = to_string(ins.bell);
      break;
    case InstructionKind::gradient:
      break;
    case InstructionKind::delay:
      j["duration"] = ins.duration_s;
      break;
  }
  if (!ins.label.empty()) j["label"] = ins.label;
  return j;
}

Schedule parse_schedule(const json& j, const std::string& path, int n) {
  allow_keys(j, path, {"name", "target", "steps"});
  Schedule s;
  s.num_spins = n;
  s.name = j.contains("name") ? text(j["name"], join(path, "name")) : "custom";
  const auto bits = text(require(j, "target", path), join(path, "target"));
  if (static_cast<int>(bits.size()) != n) fail(join(path, "target"), "expected a " + std::to_string(n) + "-bit label");
  s.target = guarded(join(path, "target"), [&] { return basis_index(bits); });
  const std::string sp = join(path, "steps");
  const json& steps = require(j, "steps", path);
  if (!steps.is_array() || steps.empty()) fail(sp, "expected a non-empty array");
  for (std::size_t i = 0; i < steps.size(); ++i) s.instructions.push_back(parse_instruction(steps[i], at(sp, i)));
  guarded(path, [&] {
    validate_schedule(s);
    return 0;
  });
  return s;
}

std::vector<double> parse_grid(const json& j, const std::string& path) {
  if (j.contains("values")) {
    if (j.contains("start") || j.contains("stop") || j.contains("step")) fail(path, "give either values or start/stop/step");
    auto v = numbers(j["values"], join(path, "values"));
    if (v.empty()) fail(join(path, "values"), "must not be empty");
    return v;
  }
  const double start = number(require(j, "start", path), join(path, "start"));
  const double stop = number(require(j, "stop", path), join(path, "stop"));
  const double step = number(require(j, "step", path), join(path, "step"));
  if (!(step > 0.0)) fail(join(path, "step"), "must be > 0");
  if (stop < start) fail(join(path, "stop"), "must be >= start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(start + static_cast<double>(i) * step);
  return v;
}

const std::set<std::string> kSweepParameters{"lock_duration", "ts", "t1", "t_lock_coh", "cnot_fidelity",
                                             "hadamard_fidelity"};

SweepSpec parse_sweep(const json& j, const std::string& path, const Schedule& schedule) {
  allow_keys(j, path, {"parameter", "lock", "values", "start", "stop", "step"});
  SweepSpec s;
  s.parameter = text(require(j, "parameter", path), join(path, "parameter"));
  if (!kSweepParameters.count(s.parameter)) fail(join(path, "parameter"), "unknown sweep parameter '" + s.parameter + "'");
  if (j.contains("lock")) {
    if (s.parameter != "lock_duration") fail(join(path, "lock"), "only applies to lock_duration");
    s.index = integer(j["lock"], join(path, "lock"));
    int locks = 0;
    for (const auto& ins : schedule.instructions) locks += ins.kind == InstructionKind::lock;
    if (s.index < 1 || s.index > locks) fail(join(path, "lock"), "schedule has " + std::to_string(locks) + " lock(s)");
  }
  s.values = parse_grid(j, path);
  return s;
}

OutputSpec parse_output(const json& j, const std::string& path) {
  allow_keys(j, path, {"directory", "snapshots", "spectra", "spectrum"});
  OutputSpec o;
  if (j.contains("directory")) o.directory = text(j["directory"], join(path, "directory"));
  if (j.contains("snapshots")) o.snapshots = boolean(j["snapshots"], join(path, "snapshots"));
  if (j.contains("spectra")) o.spectra = boolean(j["spectra"], join(path, "spectra"));
  if (j.contains("spectrum")) {
    const std::string sp = join(path, "spectrum");
    const json& s = j["spectrum"];
    allow_keys(s, sp, {"flip_angle", "line_width", "points", "sweep_width"});
    if (s.contains("flip_angle")) o.spectrum.flip_angle = number(s["flip_angle"], join(sp, "flip_angle"));
    if (s.contains("line_width")) o.spectrum.line_width_hz = number(s["line_width"], join(sp, "line_width"));
    if (s.contains("points")) o.spectrum.n_points = integer(s["points"], join(sp, "points"));
    if (s.contains("sweep_width")) o.spectrum.sweep_width_hz = number(s["sweep_width"], join(sp, "sweep_width"));
    if (!(o.spectrum.line_width_hz > 0.0)) fail(join(sp, "line_width"), "must be > 0");
    const int p = o.spectrum.n_points;
    if (p < 2 || (p & (p - 1)) != 0) fail(join(sp, "points"), "must be a power of two");
    if (o.spectrum.sweep_width_hz && !(*o.spectrum.sweep_width_hz > 0.0)) fail(join(sp, "sweep_width"), "must be > 0");
  }
  return o;
}

RunConfig from_json(const json& root) {
  allow_keys(root, "", {"system", "relaxation", "protocol", "options", "sweep", "output"});
  const json& proto = require(root, "protocol", "");
  allow_keys(proto, "protocol", {"preset", "schedule"});
  const bool has_preset = proto.contains("preset");
  if (has_preset == proto.contains("schedule")) fail("protocol", "give exactly one of preset or schedule");

  std::optional<Preset> preset;
  if (has_preset) {
    const auto name = text(proto["preset"], "protocol.preset");
    preset = guarded("protocol.preset", [&] { return make_preset(name); });
  }
  std::optional<SpinSystem> system;
  if (root.contains("system")) system = parse_system(root["system"], "system");
  else if (preset) system = preset->system;
  else fail("system", "missing required field");
  const int n = system->size();

  std::optional<RelaxationModel> model;
  if (root.contains("relaxation")) model = parse_model(root["relaxation"], "relaxation", n);
  else if (preset) model = preset->model;
  else fail("relaxation", "missing required field");
  if (model->size() != n) fail("relaxation.t1", "expected one entry per spin (" + std::to_string(n) + ")");

  Schedule schedule = preset ? preset->schedule : parse_schedule(proto["schedule"], "protocol.schedule", n);
  if (schedule.num_spins != n) {
    fail("system.shifts", "preset '" + preset->name + "' needs " + std::to_string(schedule.num_spins) + " spins");
  }
  for (const auto& p : locked_pairs(schedule)) {
    if (!model->has_pair(p)) fail("relaxation.singlets", "no entry for locked pair " + to_string(p));
  }

  ProtocolOptions options;
  if (root.contains("options")) {
    const json& o = root["options"];
    allow_keys(o, "options", {"strict_gradient", "relax_spectators", "ideal"});
    if (o.contains("strict_gradient")) options.strict_gradient = boolean(o["strict_gradient"], "options.strict_gradient");
    if (o.contains("relax_spectators")) options.relax_spectators = boolean(o["relax_spectators"], "options.relax_spectators");
    if (o.contains("ideal")) options.ideal = boolean(o["ideal"], "options.ideal");
  }

  RunConfig cfg{preset ? std::optional<std::string>(preset->name) : std::nullopt,
                *system,
                *model,
                schedule,
                options,
                std::nullopt,
                {}};
  if (root.contains("sweep")) cfg.sweep = parse_sweep(root["sweep"], "sweep", schedule);
  if (root.contains("output")) cfg.output = parse_output(root["output"], "output");
  if (cfg.options.ideal) make_ideal(cfg);
  return cfg;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return from_json(root);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

RunConfig preset_config(const std::string& name) {
  Preset p = make_preset(name);
  return RunConfig{p.name, p.system, p.model, p.schedule, {}, std::nullopt, {}};
}

std::string to_json(const RunConfig& c) {
  json root;
  json couplings = json::array();
  for (Eigen::Index r = 0; r < c.system.couplings().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index k = 0; k < c.system.couplings().cols(); ++k) row.push_back(c.system.couplings()(r, k));
    couplings.push_back(row);
  }
  root["system"] = {{"shifts", c.system.shifts()}, {"couplings", couplings}, {"epsilon", c.system.epsilons()}};
  json t1 = json::array(), t2 = json::array(), singlets = json::array();
  for (double v : c.model.t1s()) t1.push_back(time_json(v));
  for (double v : c.model.t2s()) t2.push_back(time_json(v));
  for (const auto& s : c.model.singlets()) {
    json e{{"pair", pair_json(s.pair)}, {"ts", time_json(s.ts)}, {"t_lock_coh", time_json(c.model.t_lock_coh(s.pair))}};
    singlets.push_back(e);
  }
  root["relaxation"] = {{"t1", t1}, {"t2", t2}, {"singlets", singlets}};
  json steps = json::array();
  for (const auto& ins : c.schedule.instructions) steps.push_back(instruction_json(ins));
  root["protocol"] = {{"schedule", {{"name", c.schedule.name}, {"target", basis_label(c.schedule.target, c.schedule.num_spins)},
                                    {"steps", steps}}}};
  if (c.preset) root["protocol"]["schedule"]["name"] = *c.preset;
  root["options"] = {{"strict_gradient", c.options.strict_gradient},
                     {"relax_spectators", c.options.relax_spectators},
                     {"ideal", c.options.ideal}};
  if (c.sweep) {
    root["sweep"] = {{"parameter", c.sweep->parameter}, {"values", c.sweep->values}};
    if (c.sweep->index) root["sweep"]["lock"] = c.sweep->index;
  }
  json spectrum{{"flip_angle", c.output.spectrum.flip_angle},
                {"line_width", c.output.spectrum.line_width_hz},
                {"points", c.output.spectrum.n_points}};
  if (c.output.spectrum.sweep_width_hz) spectrum["sweep_width"] = *c.output.spectrum.sweep_width_hz;
  root["output"] = {{"directory", c.output.directory.string()},
                    {"snapshots", c.output.snapshots},
                    {"spectra", c.output.spectra},
                    {"spectrum", spectrum}};
  return root.dump(2) + "\n";
}

void make_ideal(RunConfig& config) {
  config.model = ideal_model(config.schedule);
  config.options.ideal = true;
}

RunConfig with_sweep_value(const RunConfig& config, double value) {
  if (!config.sweep) throw ConfigError("config has no sweep section");
  RunConfig out = config;
  out.sweep.reset();
  const auto& p = config.sweep->parameter;
  const auto& m = config.model;
  try {
    if (p == "lock_duration") {
      int lock = 0;
      for (auto& ins : out.schedule.instructions) {
        if (ins.kind != InstructionKind::lock) continue;
        ++lock;
        if (config.sweep->index == 0 || config.sweep->index == lock) ins.duration_s = value;
      }
    } else if (p == "cnot_fidelity" || p == "hadamard_fidelity") {
      const auto kind = p == "cnot_fidelity" ? InstructionKind::cnot : InstructionKind::hadamard;
      for (auto& ins : out.schedule.instructions) {
        if (ins.kind == kind) ins.fidelity = value;
      }
    } else if (p == "t1") {
      out.model = RelaxationModel(std::vector<double>(m.t1s().size(), value), {}, m.singlets());
    } else if (p == "ts" || p == "t_lock_coh") {
      auto singlets = m.singlets();
      for (auto& s : singlets) {
        if (p == "ts") s.ts = value;
        else s.t_lock_coh = value;
      }
      out.model = RelaxationModel(m.t1s(), m.t2s(), singlets);
    }
    validate_schedule(out.schedule);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config error at sweep.values: value " + format_double(value) + " rejected: " + e.what());
  }
  return out;
}

}  // namespace sinit
