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

#include <optional>
#include <vector>

#include "sinit/density_matrix.hpp"
#include "sinit/spin_system.hpp"

namespace sinit {

struct SpectrumOptions {
  double flip_angle = 0.0872664625997164788;  // 5 degrees; linear regime up to ~10
  double line_width_hz = 1.0;
  int n_points = 4096;                        // power of two
  std::optional<double> sweep_width_hz;       // default 4x the shift span
};

struct Spectrum {
  RealVector frequencies_hz;  // ascending, center - sw/2 in steps of sw/n
  Vector amplitudes;          // real part absorption, imaginary part dispersion
  Vector fid;                 // demodulated, apodized time-domain signal
  double line_width_hz = 0.0;
  double flip_angle = 0.0;
  double sweep_width_hz = 0.0;
  double center_hz = 0.0;
};

/// Collective y pulse of `flip_angle`, free precession under the weak-coupling
/// Zeeman Hamiltonian, detection of sum_j (Ix_j + i Iy_j), Fourier transform.
/// Absorption is positive for an equilibrium input with positive epsilon.
Spectrum simulate_spectrum(const DensityMatrix& rho, const SpinSystem& system, const SpectrumOptions& options = {});

struct Peak {
  double frequency_hz;
  double amplitude;  // signed absorption height
};

/// Local maxima of |Re| above `relative_threshold` times the largest |Re|.
std::vector<Peak> find_peaks(const Spectrum& spectrum, double relative_threshold = 0.05);

struct Transition {
  double frequency_hz;
  Complex amplitude;
};

/// Single-quantum transitions of the weak-coupling Hamiltonian with the
/// amplitude they carry in `rho` after the detection pulse. Amplitudes below
/// `floor` times the largest are dropped.
std::vector<Transition> transitions(const DensityMatrix& rho, const SpinSystem& system, double flip_angle,
                                    double floor = 1e-12);

}  // namespace sinit
