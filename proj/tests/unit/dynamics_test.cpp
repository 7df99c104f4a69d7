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
#include "sinit/hamiltonian.hpp"
#include "sinit/propagators.hpp"
#include "sinit/states.hpp"

using namespace sinit;
using oracle::pi;

namespace {

SpinSystem pair_system(double dnu = 300.0, double j = 5.0) {
  RealMatrix c(2, 2);
  c << 0, j, j, 0;
  return SpinSystem({dnu / 2, -dnu / 2}, c, {1e-4, 1e-4});
}

SpinSystem register_of(int n) {
  RealMatrix c = RealMatrix::Zero(n, n);
  std::vector<double> shifts;
  for (int a = 0; a < n; ++a) {
    shifts.push_back(100.0 * (a + 1));
    for (int b = 0; b < n; ++b) {
      if (a != b) c(a, b) = 3.0 + a + b;
    }
  }
  return SpinSystem(shifts, c, std::vector<double>(static_cast<std::size_t>(n), 1e-4));
}

// Oracle generators for pair (a, b) of n spins.
struct PairOps {
  oracle::M x, y, d, zz;
  PairOps(int n, int a, int b)
      : x(oracle::spin_op(n, a, 'x') + oracle::spin_op(n, b, 'x')),
        y(oracle::spin_op(n, a, 'y') + oracle::spin_op(n, b, 'y')),
        d(oracle::spin_op(n, a, 'z') - oracle::spin_op(n, b, 'z')),
        zz(oracle::spin_op(n, a, 'z') * oracle::spin_op(n, b, 'z')) {}
};

oracle::M u1_oracle(int n, int a, int b) {
  const PairOps o(n, a, b);
  return oracle::expi(o.d, pi / 4) * oracle::expi(o.y, pi / 2) * oracle::expi(o.d, pi / 2) * oracle::expi(o.zz, pi) *
         oracle::expi(o.x, pi / 2);
}

oracle::M ud_oracle(int n, int a, int b) {
  const PairOps o(n, a, b);
  return oracle::expi(o.x, pi / 2) * oracle::expi(o.d, pi / 4);
}

oracle::M u2_oracle(int n, int a, int b) {
  const PairOps o(n, a, b);
  return oracle::expi(o.x, -pi / 2) * oracle::expi(o.zz, pi) * oracle::expi(o.x, pi / 2) * oracle::expi(o.d, -pi / 4);
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Hamiltonian, ZeemanSingleSpin) {
  const SpinSystem s({100.0}, RealMatrix::Zero(1, 1), {0.0});
  const Matrix h = zeeman_hamiltonian(s).matrix();
  EXPECT_NEAR(h(0, 0).real(), 50.0, 1e-13);
  EXPECT_NEAR(h(1, 1).real(), -50.0, 1e-13);
}

TEST(Hamiltonian, ZeemanMatchesShiftTermsOfEffective) {
  const auto s = pair_system(300.0, 0.0);
  const Matrix z = zeeman_hamiltonian(s).matrix();
  EXPECT_LT(max_abs(z - effective_hamiltonian(s, {1, 2}, 0.0).matrix()), 1e-12);
}

TEST(Hamiltonian, WeakCouplingEigenvaluesAgreeWithExactToFirstOrder) {
  const double j = 5.0;
  const auto s = pair_system(500.0, j);
  const Matrix weak = zeeman_hamiltonian(s, true).matrix();
  const oracle::M full = 250.0 * oracle::spin_op(2, 1, 'z') - 250.0 * oracle::spin_op(2, 2, 'z') +
                         j * (oracle::spin_op(2, 1, 'x') * oracle::spin_op(2, 2, 'x') +
                              oracle::spin_op(2, 1, 'y') * oracle::spin_op(2, 2, 'y') +
                              oracle::spin_op(2, 1, 'z') * oracle::spin_op(2, 2, 'z'));
  Eigen::SelfAdjointEigenSolver<oracle::M> es(full);
  Eigen::VectorXd w = weak.diagonal().real();
  std::sort(w.data(), w.data() + w.size());
  // Second-order shift is J^2 / (4 dnu) = 0.0125 Hz.
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(w(k), es.eigenvalues()(k), 0.02);
}

TEST(Hamiltonian, EffectiveLimits) {
  const auto eq = pair_system(0.0, 6.0);
  const Matrix h = effective_hamiltonian(eq, {1, 2}, 0.0).matrix();
  EXPECT_LT(max_abs(h - equivalence_hamiltonian(eq, {1, 2}).matrix()), 1e-12);
  const Vector s = singlet_triplet_states({1, 2}, 2).singlet;
  EXPECT_LT((h * s + 0.75 * 6.0 * s).norm(), 1e-12);

  const auto rf = pair_system(0.0, 0.0);
  const Matrix hx = effective_hamiltonian(rf, {1, 2}, 2000.0).matrix();
  EXPECT_LT(max_abs(hx - 2000.0 * (oracle::spin_op(2, 1, 'x') + oracle::spin_op(2, 2, 'x'))), 1e-12);
}

TEST(Hamiltonian, EffectiveMatchesTermByTermOracle) {
  const double dnu = 300, j = 5, nu12 = 100;
  const auto s = pair_system(dnu, j);
  const PairOps o(2, 1, 2);
  const oracle::M dot = oracle::spin_op(2, 1, 'x') * oracle::spin_op(2, 2, 'x') +
                        oracle::spin_op(2, 1, 'y') * oracle::spin_op(2, 2, 'y') + o.zz;
  const oracle::M expect = dnu / 2 * o.d + j * dot + nu12 * o.x;
  EXPECT_LT(max_abs(effective_hamiltonian(s, {1, 2}, nu12).matrix() - expect), 1e-12);
}

TEST(Hamiltonian, EquivalenceIsExchangeSymmetric) {
  const auto s = pair_system(0.0, 4.2);
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  const Matrix h = effective_hamiltonian(s, {1, 2}, 0.0).matrix();
  EXPECT_LT(max_abs(commutator(h, swap)), 1e-12);
}

TEST(Hamiltonian, RejectsNonHermitian) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(Hamiltonian(m, "bad"), std::invalid_argument);
}

TEST(Propagate, ZeroTimeIsIdentity) {
  const auto s = register_of(3);
  EXPECT_LT(max_abs(propagate(zeeman_hamiltonian(s, true), 0.0).matrix() - Matrix::Identity(8, 8)), 1e-15);
  EXPECT_THROW(propagate(zeeman_hamiltonian(s), -1.0), std::invalid_argument);
}

TEST(Propagate, ClosedFormZRotation) {
  const double nu = 37.0;
  const Hamiltonian h(nu * oracle::spin_op(1, 1, 'z'), "z");
  const Matrix u = propagate(h, 1.0 / (2.0 * nu)).matrix();
  EXPECT_LT(std::abs(u(0, 0) - Complex(0, -1)), 1e-12);
  EXPECT_LT(std::abs(u(1, 1) - Complex(0, 1)), 1e-12);
}

TEST(Propagate, MatchesEigendecompositionOracleOnRandomHermitian) {
  oracle::Gen gen(11);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Index d = Eigen::Index{1} << gen.integer(1, 4);
    const oracle::M h = gen.hermitian(d, gen.uniform(0.1, 50.0));
    const double t = gen.uniform(0.0, 1.0);
    const Matrix u = propagate(Hamiltonian(h, "random"), t).matrix();
    EXPECT_LT(max_abs(u - oracle::evolve(h, t)), 1e-10) << "case " << i;
  }
  const oracle::M h = gen.hermitian(4);
  EXPECT_LT(max_abs(propagate(Hamiltonian(h, "r"), 0.37).matrix() - oracle::evolve(h, 0.37)), 1e-10);
}

TEST(Propagate, GroupProperty) {
  oracle::Gen gen(12);
  for (int i = 0; i < 20; ++i) {
    const Hamiltonian h(gen.hermitian(8, 10.0), "r");
    const double a = gen.uniform(0, 0.5), b = gen.uniform(0, 0.5);
    EXPECT_LT(max_abs((propagate(h, a) * propagate(h, b)).matrix() - propagate(h, a + b).matrix()), 1e-10);
  }
}

TEST(Pulse, FullTurnIsMinusIdentity) {
  const auto s = register_of(2);
  const std::array<int, 1> one{2};
  const Matrix u = pulse(s, one, Axis::x, 2 * pi).matrix();
  EXPECT_LT(max_abs(u + Matrix::Identity(4, 4)), 1e-12);
}

TEST(Pulse, PiAboutXSwapsPopulations) {
  const SpinSystem s = SpinSystem::uncoupled(1);
  const std::array<int, 1> one{1};
  Matrix r = Matrix::Zero(2, 2);
  r(0, 0) = 0.8;
  r(1, 1) = 0.2;
  const auto out = apply(pulse(s, one, Axis::x, pi), DensityMatrix(r));
  EXPECT_NEAR(out.matrix()(0, 0).real(), 0.2, 1e-12);
  EXPECT_NEAR(out.matrix()(1, 1).real(), 0.8, 1e-12);
}

TEST(Pulse, CompositeZRotation) {
  const SpinSystem s = SpinSystem::uncoupled(1);
  const std::array<int, 1> one{1};
  const Matrix lhs = (pulse(s, one, Axis::x, pi / 2) * pulse(s, one, Axis::y, pi / 2) * pulse(s, one, Axis::x, -pi / 2)).matrix();
  const Matrix rhs = pulse(s, one, Axis::z, pi / 2).matrix();
  EXPECT_LT(oracle::phase_distance(lhs, rhs), 1e-12);
}

TEST(Composite, U1PreparesSingletMinusT0) {
  const auto s = pair_system();
  const Matrix u = u1_singlet_preparation(s, {1, 2}).matrix();
  const Matrix out = u * (oracle::spin_op(2, 1, 'z') + oracle::spin_op(2, 2, 'z')) * u.adjoint();
  const Matrix expect = pair_projector({1, 2}, 2, PairState::singlet) - pair_projector({1, 2}, 2, PairState::triplet_zero);
  EXPECT_LT(max_abs(out - expect), 1e-12);
}

TEST(Composite, FactorProductOracles) {
  for (int n : {2, 3, 4}) {
    const auto s = register_of(n);
    for (const SpinPair p : {SpinPair{1, 2}, SpinPair{n - 1, n}, SpinPair{1, n}}) {
      if (p.first == p.second) continue;
      EXPECT_LT(max_abs(u1_singlet_preparation(s, p).matrix() - u1_oracle(n, p.first, p.second)), 1e-10);
      EXPECT_LT(max_abs(ud_detection(s, p).matrix() - ud_oracle(n, p.first, p.second)), 1e-10);
      EXPECT_LT(max_abs(u2_singlet_to_pseudopure(s, p).matrix() - u2_oracle(n, p.first, p.second)), 1e-10);
    }
  }
}

TEST(Composite, InversesAndUnitarity) {
  const auto s = register_of(3);
  for (const Propagator& u : {u1_singlet_preparation(s, {1, 2}), ud_detection(s, {2, 3}), u2_singlet_to_pseudopure(s, {1, 3}),
                              cnot(s, 3, 2), pseudo_hadamard(s, 2), bell_rotation(s, {1, 2}, BellVariant::phi_plus)}) {
    EXPECT_LT(unitarity_error(u.matrix()), 1e-10) << u.label();
    EXPECT_LT(max_abs((u * u.adjoint()).matrix() - Matrix::Identity(8, 8)), 1e-10) << u.label();
  }
}

TEST(Composite, U2MapsSingletToZeroOne) {
  const auto s = pair_system();
  const Matrix u = u2_singlet_to_pseudopure(s, {1, 2}).matrix();
  const auto b = singlet_triplet_states({1, 2}, 2);
  const Vector out = u * b.singlet;
  EXPECT_NEAR(std::abs(out(0b01)), 1.0, 1e-10);
  for (const Vector* t : {&b.triplet_plus, &b.triplet_zero, &b.triplet_minus}) {
    EXPECT_NEAR(std::abs((u * *t).dot(out)), 0.0, 1e-12);
  }
  const auto mixed = apply(Propagator(u, "U2"), maximally_mixed(2));
  EXPECT_LT(max_abs(mixed.matrix() - Matrix::Identity(4, 4) / 4.0), 1e-15);
}

TEST(Composite, UnmodifiedThreeFactorConversionLeavesSingletInvariant) {
  // Documents why the conversion carries a leading differential z-rotation.
  const PairOps o(2, 1, 2);
  const oracle::M bare = oracle::expi(o.x, -pi / 2) * oracle::expi(o.zz, pi) * oracle::expi(o.x, pi / 2);
  const Vector s = singlet_triplet_states({1, 2}, 2).singlet;
  EXPECT_NEAR(std::abs(s.dot(bare * s)), 1.0, 1e-12);
}

TEST(Composite, UdTurnsSingletIntoSingleQuantumCoherence) {
  const auto s = pair_system();
  const auto ps = DensityMatrix(pair_projector({1, 2}, 2, PairState::singlet));
  const Matrix out = apply(ud_detection(s, {1, 2}), ps).matrix();
  double sq = 0.0;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (std::abs(magnetization2(x, 2) - magnetization2(y, 2)) == 2) sq += std::norm(out(x, y));
    }
  }
  EXPECT_GT(sq, 0.1);
  EXPECT_LT(max_abs(apply(ud_detection(s, {1, 2}), maximally_mixed(2)).matrix() - Matrix::Identity(4, 4) / 4.0), 1e-15);
}

TEST(Bell, RotationsOfSinglet) {
  const auto s = pair_system();
  const Vector singlet = singlet_triplet_states({1, 2}, 2).singlet;
  const std::array<std::pair<BellVariant, BellState>, 3> cases{{{BellVariant::psi_plus, BellState::psi_plus},
                                                                {BellVariant::phi_plus, BellState::phi_plus},
                                                                {BellVariant::phi_minus, BellState::phi_minus}}};
  std::vector<Vector> outs;
  for (auto [v, b] : cases) {
    const Vector out = bell_rotation(s, {1, 2}, v).matrix() * singlet;
    EXPECT_NEAR(oracle::overlap(out, bell_state(b)), 1.0, 1e-12) << to_string(v);
    outs.push_back(out);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = i + 1; k < 3; ++k) EXPECT_NEAR(std::abs(outs[i].dot(outs[k])), 0.0, 1e-12);
  }
  EXPECT_THROW(parse_bell_variant("psi-"), std::invalid_argument);
}

TEST(Bell, ZRotationByChemicalShiftEvolution) {
  // Shift evolution for 1/(2 dnu) gives e^{-i(pi/2)(Iz1 - Iz2)}, which acts on
  // the singlet like e^{i pi Iz1} up to a global phase.
  const auto s = pair_system(300.0, 5.0);
  const Matrix direct = differential_z_rotation(s, {1, 2}, pi / 2).matrix();
  const Matrix shift = chemical_shift_z_rotation(s, {1, 2}, pi / 2).matrix();
  EXPECT_LT(max_abs(direct - shift), 1e-10);
  const Vector singlet = singlet_triplet_states({1, 2}, 2).singlet;
  EXPECT_NEAR(oracle::overlap(shift * singlet, bell_state(BellState::psi_plus)), 1.0, 1e-10);
}

TEST(Coupling, EvolutionForHalfPeriodEqualsZzFactor) {
  const auto s = pair_system(300.0, 7.0);
  const Matrix timed = coupling_evolution(s, {1, 2}, 1.0 / (2 * 7.0)).matrix();
  EXPECT_LT(max_abs(timed - zz_rotation(s, {1, 2}, pi).matrix()), 1e-10);
}

TEST(Cnot, TruthTable) {
  const auto s = pair_system();
  const Matrix u = cnot(s, 2, 1, ControlPolarity::on_one).matrix();
  EXPECT_EQ(u(0b11, 0b01), Complex(1.0));
  EXPECT_EQ(u(0b00, 0b00), Complex(1.0));
  EXPECT_EQ(u(0b10, 0b10), Complex(1.0));
  EXPECT_EQ(u(0b01, 0b11), Complex(1.0));
  const Matrix o = cnot(s, 2, 1, ControlPolarity::on_zero).matrix();
  EXPECT_EQ(o(0b10, 0b00), Complex(1.0));
  EXPECT_EQ(o(0b01, 0b01), Complex(1.0));
  EXPECT_LT(max_abs(u * u - Matrix::Identity(4, 4)), 1e-15);
  EXPECT_THROW(cnot(s, 1, 1), std::invalid_argument);
}

TEST(Cnot, OpenControlIsConjugatedByNot) {
  const auto s = register_of(3);
  const std::array<int, 1> c{3};
  const Matrix x = not_gate(s, c).matrix();
  const Matrix lhs = cnot(s, 3, 1, ControlPolarity::on_zero).matrix();
  const Matrix rhs = x.adjoint() * cnot(s, 3, 1, ControlPolarity::on_one).matrix() * x;
  EXPECT_LT(max_abs(lhs - rhs), 1e-12);
}

TEST(Cnot, SingletBranchesOnThirdSpin) {
  const auto s = register_of(3);
  const Matrix u = cnot(s, 3, 2).matrix();
  const Vector singlet = singlet_triplet_states({1, 2}, 2).singlet;
  const Vector s0 = embed_pair_ket(singlet, {1, 2}, 3, 0b000);
  const Vector s1 = embed_pair_ket(singlet, {1, 2}, 3, 0b001);
  EXPECT_NEAR(oracle::overlap(u * s0, s0), 1.0, 1e-14);
  EXPECT_NEAR(oracle::overlap(u * s1, embed_pair_ket(bell_state(BellState::phi_minus), {1, 2}, 3, 0b001)), 1.0, 1e-14);
}

TEST(PseudoHadamard, CaptionMapEntrywise) {
  const SpinSystem s = SpinSystem::uncoupled(1);
  const Matrix h = pseudo_hadamard(s, 1).matrix();
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_LT(std::abs(h(0, 0) - r), 1e-12);
  EXPECT_LT(std::abs(h(1, 0) + r), 1e-12);
  EXPECT_LT(std::abs(h(0, 1) - r), 1e-12);
  EXPECT_LT(std::abs(h(1, 1) - r), 1e-12);
  const std::array<int, 1> one{1};
  // h^2 is a pi y-rotation: it swaps populations like NOT but is not NOT up to phase.
  const Matrix h2 = h * h;
  EXPECT_LT(max_abs(h2.cwiseAbs() - not_gate(s, one).matrix().cwiseAbs()), 1e-12);
  const Matrix pop = pseudopure_state(0, 1, 0.7).matrix();
  EXPECT_LT(max_abs(h2 * pop * h2.adjoint() - apply(not_gate(s, one), DensityMatrix(pop)).matrix()), 1e-12);
  EXPECT_LT(max_abs(apply(pseudo_hadamard(s, 1), maximally_mixed(1)).matrix() - Matrix::Identity(2, 2) / 2.0), 1e-15);
  EXPECT_LT(max_abs(h - oracle::expi(oracle::spin_op(1, 1, 'y'), -pi / 2)), 1e-12);
}

TEST(PseudoHadamard, WithOpenCnotTakesSingletToZeroOne) {
  const auto s = pair_system();
  const Vector singlet = singlet_triplet_states({1, 2}, 2).singlet;
  const Vector out = (pseudo_hadamard(s, 2) * cnot(s, 2, 1, ControlPolarity::on_zero)).matrix() * singlet;
  EXPECT_NEAR(std::abs(out(0b01)), 1.0, 1e-12);
}
