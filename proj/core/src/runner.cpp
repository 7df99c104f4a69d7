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

#include "sinit/runner.hpp"

#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sinit/analysis.hpp"
#include "sinit/matrix_io.hpp"
#include "sinit/spectrum.hpp"

namespace sinit {

namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void make_dirs(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir.string() + ": " + ec.message());
}

std::string indexed(std::size_t i, const std::string& label) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu_", i);
  return buf + label;
}

std::string populations_csv(const ProtocolResult& r, int n) {
  std::ostringstream out;
  out << "index,state";
  for (const auto& s : r.snapshots) out << ',' << s.label;
  out << '\n';
  const auto d = std::size_t{1} << n;
  std::vector<RealVector> pops;
  for (const auto& s : r.snapshots) pops.push_back(diagonal_tomography(s.state));
  for (std::size_t k = 0; k < d; ++k) {
    out << k << ",|" << basis_label(k, n) << '>';
    for (const auto& p : pops) out << ',' << format_double(p(static_cast<Eigen::Index>(k)));
    out << '\n';
  }
  return out.str();
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "frequency_hz,real,imag\n";
  for (Eigen::Index k = 0; k < s.frequencies_hz.size(); ++k) {
    out << format_double(s.frequencies_hz(k)) << ',' << format_double(s.amplitudes(k).real()) << ','
        << format_double(s.amplitudes(k).imag()) << '\n';
  }
  return out.str();
}

void write_point(const fs::path& dir, const RunConfig& config, const ProtocolResult& r) {
  make_dirs(dir);
  write_matrix_file(dir / "final_state.txt", r.final_state.matrix());
  write_text(dir / "populations.csv", populations_csv(r, config.system.size()));
  if (config.output.snapshots) {
    make_dirs(dir / "snapshots");
    for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
      write_matrix_file(dir / "snapshots" / (indexed(i, r.snapshots[i].label) + ".txt"), r.snapshots[i].state.matrix());
    }
  }
  if (config.output.spectra) {
    make_dirs(dir / "spectra");
    if (config.output.snapshots) {
      for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
        const auto spec = simulate_spectrum(r.snapshots[i].state, config.system, config.output.spectrum);
        write_text(dir / "spectra" / (indexed(i, r.snapshots[i].label) + ".csv"), spectrum_csv(spec));
      }
    } else {
      write_text(dir / "spectra" / "final.csv",
                 spectrum_csv(simulate_spectrum(r.final_state, config.system, config.output.spectrum)));
    }
  }
}

}  // namespace

std::vector<PointResult> execute(const RunConfig& config) {
  if (!config.sweep) {
    return {{std::nullopt, run_schedule(config.system, config.model, config.schedule, config.options)}};
  }
  std::vector<RunConfig> points;
  for (double v : config.sweep->values) points.push_back(with_sweep_value(config, v));
  std::vector<std::future<ProtocolResult>> futures;
  for (const auto& p : points) {
    futures.push_back(std::async(std::launch::async, [&p] { return run_schedule(p.system, p.model, p.schedule, p.options); }));
  }
  std::vector<PointResult> out;
  for (std::size_t i = 0; i < futures.size(); ++i) out.push_back({config.sweep->values[i], futures[i].get()});
  return out;
}

std::string metrics_csv(const RunConfig& config, const std::vector<PointResult>& points) {
  std::set<std::string> names;
  for (const auto& p : points) {
    for (const auto& [k, v] : p.result.metrics) names.insert(k);
  }
  std::ostringstream out;
  out << "point";
  if (config.sweep) out << ',' << config.sweep->parameter;
  for (const auto& n : names) out << ',' << n;
  out << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << i;
    if (config.sweep) out << ',' << format_double(*points[i].sweep_value);
    for (const auto& n : names) {
      out << ',';
      const auto it = points[i].result.metrics.find(n);
      if (it != points[i].result.metrics.end()) out << format_double(it->second);
    }
    out << '\n';
  }
  return out.str();
}

std::filesystem::path run(const RunConfig& config, const std::filesystem::path& out) {
  const fs::path dir = out.empty() ? config.output.directory : out;
  const auto points = execute(config);
  make_dirs(dir);
  write_text(dir / "resolved_config.json", to_json(config));
  if (config.sweep) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "point_%03zu", i);
      write_point(dir / name, with_sweep_value(config, *points[i].sweep_value), points[i].result);
    }
  } else {
    write_point(dir, config, points.front().result);
  }
  write_text(dir / "metrics.csv", metrics_csv(config, points));
  return dir;
}

}  // namespace sinit
