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

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "sinit/analysis.hpp"
#include "sinit/presets.hpp"
#include "sinit/protocols.hpp"
#include "sinit/spectrum.hpp"
#include "sinit/states.hpp"

using namespace sinit;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

SpinSystem two_spin_system() { return make_preset("2q-bromothiophene").system; }

// Line frequency of `spin` flipping with the other spins fixed as in `x`,
// from the weak-coupling energy formula.
double line_oracle(const SpinSystem& s, int spin, std::size_t x) {
  const int n = s.size();
  double f = s.shift(spin);
  for (int k = 1; k <= n; ++k) {
    if (k == spin) continue;
    const double mk = oracle::bit(x, k, n) ? -0.5 : 0.5;
    f += s.coupling(spin, k) * mk;
  }
  return f;
}

}  // namespace

TEST(Correlation, Examples) {
  oracle::Gen g(1);
  const Matrix t = pseudopure_state(1, 2, 0.3).matrix();
  EXPECT_NEAR(correlation(t, t), 1.0, 1e-14);
  const Matrix flipped = Matrix::Identity(4, 4) / 4.0 - traceless_part(t);
  EXPECT_NEAR(correlation(flipped, t), -1.0, 1e-14);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = g.density(8), b = g.density(8);
    EXPECT_NEAR(correlation(a, b), oracle::corr(a, b), 1e-12);
    EXPECT_NEAR(correlation(a, a), 1.0, 1e-12);
  }
}

TEST(Correlation, ScaleInvariantOnDeviations) {
  oracle::Gen g(2);
  for (int i = 0; i < 50; ++i) {
    const Matrix dev = traceless_part(g.density(4));
    const Matrix t = pseudopure_state(2, 2, 1.0).matrix();
    const double alpha = g.uniform(1e-6, 10.0);
    EXPECT_NEAR(correlation(Matrix(Matrix::Identity(4, 4) / 4.0 + alpha * dev), t),
                correlation(Matrix(Matrix::Identity(4, 4) / 4.0 + dev), t), 1e-12);
  }
}

TEST(Correlation, ZeroDeviationIsAnError) {
  EXPECT_THROW(correlation(maximally_mixed(2), pseudopure_state(1, 2, 1.0)), std::domain_error);
  EXPECT_THROW(diagonal_correlation(Matrix(Matrix::Constant(2, 2, 0.5)), Matrix(Matrix::Constant(2, 2, 0.5))),
               std::domain_error);
  EXPECT_THROW(correlation(pseudopure_state(0, 1, 1.0).matrix(), pseudopure_state(0, 2, 1.0).matrix()), std::invalid_argument);
}

TEST(Correlation, FullModeKeepsBackground) {
  const Matrix t = pseudopure_state(1, 2, 0.1).matrix();
  const Matrix r = pseudopure_state(1, 2, 0.5).matrix();
  EXPECT_NEAR(correlation(r, t, CorrelationMode::deviation), 1.0, 1e-14);
  EXPECT_LT(correlation(r, t, CorrelationMode::full), 1.0 - 1e-3);
}

TEST(DiagonalCorrelation, IsCoherenceBlind) {
  oracle::Gen g(3);
  const Matrix t = pseudopure_state(5, 3, 0.2).matrix();
  Matrix scrambled = t;
  scrambled(0, 3) = scrambled(3, 0) = 0.01;
  scrambled(1, 6) = Complex(0.0, 0.02);
  scrambled(6, 1) = Complex(0.0, -0.02);
  EXPECT_NEAR(diagonal_correlation(scrambled, t), 1.0, 1e-14);
  EXPECT_LT(correlation(scrambled, t), 1.0);
  const Matrix a = g.density(8);
  EXPECT_NEAR(diagonal_correlation(a, a), 1.0, 1e-14);
}

TEST(SingletContent, Examples) {
  EXPECT_NEAR(singlet_content(DensityMatrix(pair_projector({1, 2}, 2, PairState::singlet)), {1, 2}), 1.0, 1e-15);
  EXPECT_NEAR(singlet_content(maximally_mixed(2), {1, 2}), 0.25, 1e-15);
  EXPECT_NEAR(singlet_content(maximally_mixed(4), {2, 4}), 0.25, 1e-15);
  EXPECT_THROW(singlet_content(maximally_mixed(2), {1, 1}), std::invalid_argument);
}

TEST(SingletContent, PostLockStateOfTwoQubitRun) {
  const auto p = make_preset("2q-bromothiophene");
  const auto r = run_schedule(p.system, p.model, p.schedule);
  EXPECT_GT(r.metrics.at("singlet_content_lock1"), 0.25);
  EXPECT_NEAR(r.metrics.at("singlet_correlation_lock1"), 0.991, 0.03);
}

TEST(CoherenceOrders, Partition) {
  oracle::Gen g(4);
  const auto diag = coherence_orders(pseudopure_state(3, 3, 0.4).matrix());
  for (const auto& [p, m] : diag) {
    if (p != 0) {
      EXPECT_EQ(max_abs(m), 0.0);
    }
  }
  const auto singlet = coherence_order_norms(pair_projector({1, 2}, 2, PairState::singlet));
  for (const auto& [p, v] : singlet) {
    if (p != 0) {
      EXPECT_EQ(v, 0.0);
    }
  }
  for (int i = 0; i < 30; ++i) {
    const Matrix r = g.density(16);
    Matrix sum = Matrix::Zero(16, 16);
    for (const auto& [p, m] : coherence_orders(r)) {
      EXPECT_LE(std::abs(p), 4);
      sum += m;
    }
    EXPECT_LT(max_abs(sum - r), 1e-14);
  }
}

TEST(DiagonalTomography, Examples) {
  const RealVector p = diagonal_tomography(pseudopure_state(0b1001, 4, 1.0));
  for (int k = 0; k < 16; ++k) EXPECT_EQ(p(k), k == 9 ? 1.0 : 0.0);
  const RealVector u = diagonal_tomography(maximally_mixed(4));
  for (int k = 0; k < 16; ++k) EXPECT_NEAR(u(k), 1.0 / 16, 1e-17);
  EXPECT_NEAR(epsilon_prime(pseudopure_state(6, 3, 0.37), 6), 0.37, 1e-15);
}

TEST(Spectrum, MaximallyMixedIsSilent) {
  const auto s = simulate_spectrum(maximally_mixed(2), two_spin_system());
  EXPECT_LT(s.amplitudes.cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(find_peaks(s).empty());
}

TEST(Spectrum, PseudopureShowsOneLinePerSpin) {
  const auto sys = two_spin_system();
  const auto spec = simulate_spectrum(pseudopure_state(0b01, 2, 1.0), sys);
  const auto peaks = find_peaks(spec);
  ASSERT_EQ(peaks.size(), 2U);
  const double bin = spec.sweep_width_hz / spec.frequencies_hz.size();
  // |01>: spin 1 flips with spin 2 down, spin 2 flips with spin 1 up.
  const double f1 = line_oracle(sys, 1, 0b01);
  const double f2 = line_oracle(sys, 2, 0b01);
  EXPECT_NEAR(f1, sys.shift(1) - sys.coupling(1, 2) / 2, 1e-12);
  std::array<double, 2> found{peaks[0].frequency_hz, peaks[1].frequency_hz};
  std::array<double, 2> expect{std::min(f1, f2), std::max(f1, f2)};
  for (int k = 0; k < 2; ++k) EXPECT_LE(std::abs(found[k] - expect[k]), bin);
  EXPECT_LT(peaks[0].amplitude * peaks[1].amplitude, 0.0);
}

TEST(Spectrum, EquilibriumShowsFullMultiplet) {
  const auto sys = two_spin_system();
  const auto spec = simulate_spectrum(equilibrium_state(sys), sys);
  const auto peaks = find_peaks(spec);
  ASSERT_EQ(peaks.size(), 4U);
  const double bin = spec.sweep_width_hz / spec.frequencies_hz.size();
  std::vector<double> expect;
  for (int j = 1; j <= 2; ++j) {
    for (std::size_t x : {0b00U, 0b11U}) expect.push_back(line_oracle(sys, j, x));
  }
  std::sort(expect.begin(), expect.end());
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_LE(std::abs(peaks[k].frequency_hz - expect[k]), bin);
    EXPECT_GT(peaks[k].amplitude, 0.0);
  }
}

TEST(Spectrum, LinearInSmallFlipAngle) {
  const auto sys = two_spin_system();
  const auto rho = equilibrium_state(sys);
  SpectrumOptions a, b;
  a.flip_angle = oracle::pi / 36;
  b.flip_angle = oracle::pi / 72;
  const auto sa = simulate_spectrum(rho, sys, a);
  const auto sb = simulate_spectrum(rho, sys, b);
  const double ratio = sa.amplitudes.real().maxCoeff() / sb.amplitudes.real().maxCoeff();
  EXPECT_NEAR(ratio, 2.0, 0.02);
}

TEST(Spectrum, Parseval) {
  const auto sys = make_preset("3q-acrylonitrile").system;
  const auto spec = simulate_spectrum(equilibrium_state(sys), sys);
  const double time = spec.fid.squaredNorm();
  const double freq = spec.amplitudes.squaredNorm() / static_cast<double>(spec.amplitudes.size());
  EXPECT_NEAR(time, freq, 1e-9 * time);
}

TEST(Spectrum, InvalidGrid) {
  const auto sys = two_spin_system();
  SpectrumOptions o;
  o.n_points = 1000;
  EXPECT_THROW(simulate_spectrum(maximally_mixed(2), sys, o), std::invalid_argument);
  o = {};
  o.line_width_hz = 0.0;
  EXPECT_THROW(simulate_spectrum(maximally_mixed(2), sys, o), std::invalid_argument);
  o = {};
  o.sweep_width_hz = -5.0;
  EXPECT_THROW(simulate_spectrum(maximally_mixed(2), sys, o), std::invalid_argument);
}
