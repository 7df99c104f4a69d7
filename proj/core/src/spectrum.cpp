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

#include "sinit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "sinit/hamiltonian.hpp"
#include "sinit/propagators.hpp"

namespace sinit {

namespace {

using std::numbers::pi;

std::vector<int> all_spins(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = j + 1;
  return s;
}

double default_sweep_width(const SpinSystem& system, double line_width) {
  const auto [lo, hi] = std::minmax_element(system.shifts().begin(), system.shifts().end());
  const double span = *hi - *lo;
  if (span > 0.0) return 4.0 * span;
  return 4.0 * (system.couplings().cwiseAbs().sum() + 10.0 * line_width);
}

}  // namespace

std::vector<Transition> transitions(const DensityMatrix& rho, const SpinSystem& system, double flip_angle,
                                    double floor) {
  if (rho.num_spins() != system.size()) throw std::invalid_argument("state and system sizes differ");
  const int n = system.size();
  const auto spins = all_spins(n);
  const DensityMatrix pulsed = apply(pulse(system, spins, Axis::y, flip_angle), rho);
  const Matrix iplus = collective_operator(n, spins, Axis::x).matrix() + kI * collective_operator(n, spins, Axis::y).matrix();
  const RealVector energy = zeeman_hamiltonian(system, true).matrix().diagonal().real();
  const Matrix& r = pulsed.matrix();

  std::vector<Transition> out;
  double largest = 0.0;
  for (Eigen::Index k = 0; k < r.rows(); ++k) {
    for (Eigen::Index l = 0; l < r.cols(); ++l) {
      if (iplus(k, l) == Complex(0.0)) continue;
      // tr(rho I+) picks rho(l, k) I+(k, l), precessing at E_k - E_l.
      const Complex a = r(l, k) * iplus(k, l);
      out.push_back({energy(k) - energy(l), a});
      largest = std::max(largest, std::abs(a));
    }
  }
  std::erase_if(out, [&](const Transition& t) { return std::abs(t.amplitude) <= floor * largest || largest == 0.0; });
  std::sort(out.begin(), out.end(), [](const Transition& a, const Transition& b) { return a.frequency_hz < b.frequency_hz; });
  return out;
}

Spectrum simulate_spectrum(const DensityMatrix& rho, const SpinSystem& system, const SpectrumOptions& options) {
  const int npts = options.n_points;
  if (npts < 2 || (npts & (npts - 1)) != 0) throw std::invalid_argument("spectrum points must be a power of two >= 2");
  if (!(options.line_width_hz > 0.0)) throw std::invalid_argument("line width must be > 0");
  const double sw = options.sweep_width_hz.value_or(default_sweep_width(system, options.line_width_hz));
  if (!(sw > 0.0) || !std::isfinite(sw)) throw std::invalid_argument("sweep width must be > 0");

  Spectrum spec;
  spec.line_width_hz = options.line_width_hz;
  spec.flip_angle = options.flip_angle;
  spec.sweep_width_hz = sw;
  double center = 0.0;
  for (double s : system.shifts()) center += s;
  spec.center_hz = center / system.size();

  const auto lines = transitions(rho, system, options.flip_angle, 0.0);
  spec.fid = Vector::Zero(npts);
  const double dt = 1.0 / sw;
  for (int j = 0; j < npts; ++j) {
    const double t = j * dt;
    Complex s = 0.0;
    for (const auto& line : lines) s += line.amplitude * std::exp(Complex(0.0, 2.0 * pi * (line.frequency_hz - spec.center_hz) * t));
    spec.fid(j) = s * std::exp(-pi * options.line_width_hz * t);
  }

  Eigen::FFT<double> fft;
  std::vector<Complex> time(spec.fid.data(), spec.fid.data() + npts);
  std::vector<Complex> freq;
  fft.fwd(freq, time);
  spec.amplitudes.resize(npts);
  spec.frequencies_hz.resize(npts);
  const int half = npts / 2;
  for (int k = 0; k < npts; ++k) {
    spec.amplitudes(k) = freq[static_cast<std::size_t>((k + half) % npts)];
    spec.frequencies_hz(k) = spec.center_hz - sw / 2.0 + k * sw / npts;
  }
  return spec;
}

std::vector<Peak> find_peaks(const Spectrum& spectrum, double relative_threshold) {
  const RealVector mag = spectrum.amplitudes.real().cwiseAbs();
  const Eigen::Index n = mag.size();
  std::vector<Peak> peaks;
  if (n < 3) return peaks;
  // Round-off from a signal-free state stays far below this.
  if (mag.maxCoeff() < 1e-12) return peaks;
  const double cut = relative_threshold * mag.maxCoeff();
  for (Eigen::Index k = 1; k + 1 < n; ++k) {
    if (mag(k) > cut && mag(k) >= mag(k - 1) && mag(k) > mag(k + 1)) {
      peaks.push_back({spectrum.frequencies_hz(k), spectrum.amplitudes(k).real()});
    }
  }
  return peaks;
}

}  // namespace sinit
