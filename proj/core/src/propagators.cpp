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

#include "sinit/propagators.hpp"

#include <array>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <unsupported/Eigen/MatrixFunctions>

#include "sinit/operators.hpp"

namespace sinit {

namespace {

using std::numbers::pi;

std::array<int, 2> spins_of(const SpinPair& pair) { return {pair.first, pair.second}; }

Matrix collective(const SpinSystem& system, const SpinPair& pair, Axis axis) {
  const auto spins = spins_of(pair);
  return collective_operator(system.size(), spins, axis).matrix();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

Propagator::Propagator(Matrix data, std::string label) : data_(std::move(data)), label_(std::move(label)) {
  if (data_.rows() != data_.cols()) throw std::invalid_argument("propagator must be square");
  if (unitarity_error(data_) > kUnitaryTolerance) {
    throw std::invalid_argument("propagator '" + label_ + "' is not unitary");
  }
}

Propagator Propagator::identity(int num_spins) {
  if (num_spins < 1 || num_spins > kMaxSpins) throw std::invalid_argument("invalid register size");
  const auto d = Eigen::Index{1} << num_spins;
  return Propagator(Matrix::Identity(d, d), "identity");
}

Propagator Propagator::operator*(const Propagator& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("propagator dimension mismatch");
  return Propagator(data_ * other.data_, label_ + "*" + other.label_);
}

Propagator Propagator::adjoint() const { return Propagator(data_.adjoint(), label_ + "^dag"); }

Propagator propagate(const Hamiltonian& h, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("evolution time must be finite and >= 0");
  const Matrix generator = Complex(0.0, -2.0 * pi * t) * h.matrix();
  return Propagator(generator.exp(), "exp(-i2pi " + h.label() + " t=" + fmt(t) + ")");
}

Propagator rotation(const Matrix& generator, double angle, std::string label) {
  if (hermiticity_error(generator) > kHermitianTolerance) throw std::invalid_argument("rotation generator must be Hermitian");
  const Matrix g = Complex(0.0, -angle) * generator;
  return Propagator(g.exp(), std::move(label));
}

Propagator pulse(const SpinSystem& system, std::span<const int> spins, Axis axis, double angle) {
  system.check_spins(spins);
  std::string label = "pulse(" + to_string(axis) + "," + fmt(angle) + ";";
  for (int s : spins) label += std::to_string(s);
  label += ")";
  return rotation(collective_operator(system.size(), spins, axis).matrix(), angle, std::move(label));
}

Propagator differential_z_rotation(const SpinSystem& system, const SpinPair& pair, double angle) {
  system.check_pair(pair);
  return rotation(z_difference(system.size(), pair).matrix(), angle, "dz(" + fmt(angle) + ")" + to_string(pair));
}

Propagator zz_rotation(const SpinSystem& system, const SpinPair& pair, double angle) {
  system.check_pair(pair);
  return rotation(zz_product(system.size(), pair).matrix(), angle, "zz(" + fmt(angle) + ")" + to_string(pair));
}

Propagator chemical_shift_evolution(const SpinSystem& system, const SpinPair& pair, double duration) {
  system.check_pair(pair);
  const double dnu = system.shift(pair.first) - system.shift(pair.second);
  Hamiltonian h(0.5 * dnu * z_difference(system.size(), pair).matrix(), "shift" + to_string(pair));
  return propagate(h, duration);
}

Propagator chemical_shift_z_rotation(const SpinSystem& system, const SpinPair& pair, double angle) {
  system.check_pair(pair);
  const double dnu = system.shift(pair.first) - system.shift(pair.second);
  if (dnu == 0.0) throw std::invalid_argument("chemical-shift z-rotation needs distinct shifts");
  const double t = angle / (pi * dnu);
  if (t < 0.0) throw std::invalid_argument("angle sign incompatible with the shift difference");
  return chemical_shift_evolution(system, pair, t);
}

Propagator coupling_evolution(const SpinSystem& system, const SpinPair& pair, double duration) {
  return propagate(coupling_hamiltonian(system, pair), duration);
}

Propagator u1_singlet_preparation(const SpinSystem& system, const SpinPair& pair) {
  system.check_pair(pair);
  const Matrix x = collective(system, pair, Axis::x);
  const Matrix y = collective(system, pair, Axis::y);
  const Matrix d = z_difference(system.size(), pair).matrix();
  const Matrix zz = zz_product(system.size(), pair).matrix();
  const Propagator u = rotation(d, pi / 4, "dz") * rotation(y, pi / 2, "y") * rotation(d, pi / 2, "dz") *
                       rotation(zz, pi, "zz") * rotation(x, pi / 2, "x");
  return Propagator(u.matrix(), "U1" + to_string(pair));
}

Propagator ud_detection(const SpinSystem& system, const SpinPair& pair) {
  system.check_pair(pair);
  const Matrix x = collective(system, pair, Axis::x);
  const Matrix d = z_difference(system.size(), pair).matrix();
  const Propagator u = rotation(x, pi / 2, "x") * rotation(d, pi / 4, "dz");
  return Propagator(u.matrix(), "UD" + to_string(pair));
}

Propagator u2_singlet_to_pseudopure(const SpinSystem& system, const SpinPair& pair) {
  system.check_pair(pair);
  const Matrix x = collective(system, pair, Axis::x);
  const Matrix d = z_difference(system.size(), pair).matrix();
  const Matrix zz = zz_product(system.size(), pair).matrix();
  // The three-factor product alone is exchange symmetric and leaves |S0>
  // invariant; the leading differential z-rotation breaks the symmetry.
  const Propagator u = rotation(x, -pi / 2, "x") * rotation(zz, pi, "zz") * rotation(x, pi / 2, "x") *
                       rotation(d, -pi / 4, "dz");
  return Propagator(u.matrix(), "U2" + to_string(pair));
}

std::string to_string(BellVariant variant) {
  switch (variant) {
    case BellVariant::psi_plus:
      return "psi+";
    case BellVariant::phi_plus:
      return "phi+";
    case BellVariant::phi_minus:
      return "phi-";
  }
  throw std::invalid_argument("unknown Bell variant");
}

BellVariant parse_bell_variant(const std::string& name) {
  if (name == "psi+") return BellVariant::psi_plus;
  if (name == "phi+") return BellVariant::phi_plus;
  if (name == "phi-") return BellVariant::phi_minus;
  throw std::invalid_argument("unknown Bell variant '" + name + "' (expected psi+, phi+ or phi-)");
}

Propagator bell_rotation(const SpinSystem& system, const SpinPair& pair, BellVariant variant) {
  system.check_pair(pair);
  const int n = system.size();
  const Matrix z1 = spin_operator(n, pair.first, Axis::z).matrix();
  const Matrix x1 = spin_operator(n, pair.first, Axis::x).matrix();
  switch (variant) {
    case BellVariant::psi_plus:
      return rotation(z1, -pi, "bell(psi+)" + to_string(pair));
    case BellVariant::phi_plus:
      return Propagator((rotation(x1, -pi, "x") * rotation(z1, -pi, "z")).matrix(), "bell(phi+)" + to_string(pair));
    case BellVariant::phi_minus:
      return rotation(x1, -pi, "bell(phi-)" + to_string(pair));
  }
  throw std::invalid_argument("unknown Bell variant");
}

Propagator cnot(const SpinSystem& system, int control, int target, ControlPolarity polarity) {
  system.check_spin(control);
  system.check_spin(target);
  if (control == target) throw std::invalid_argument("cNOT control and target must differ");
  const int n = system.size();
  const auto d = static_cast<Eigen::Index>(system.dim());
  const int fire = polarity == ControlPolarity::on_one ? 1 : 0;
  const std::size_t flip = std::size_t{1} << (n - target);
  Matrix u = Matrix::Zero(d, d);
  for (std::size_t x = 0; x < static_cast<std::size_t>(d); ++x) {
    const std::size_t y = spin_bit(x, control, n) == fire ? (x ^ flip) : x;
    u(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return Propagator(std::move(u), std::string(fire ? "cnot" : "ocnot") + "(" + std::to_string(control) + "->" +
                                      std::to_string(target) + ")");
}

Propagator pseudo_hadamard(const SpinSystem& system, int spin) {
  system.check_spin(spin);
  return rotation(spin_operator(system.size(), spin, Axis::y).matrix(), -pi / 2, "h(" + std::to_string(spin) + ")");
}

Propagator not_gate(const SpinSystem& system, std::span<const int> spins) {
  system.check_spins(spins);
  std::string label = "not(";
  for (int s : spins) label += std::to_string(s);
  label += ")";
  return rotation(collective_operator(system.size(), spins, Axis::x).matrix(), pi, std::move(label));
}

DensityMatrix apply(const Propagator& u, const DensityMatrix& rho) {
  if (u.dim() != rho.dim()) throw std::invalid_argument("propagator and state dimensions differ");
  return DensityMatrix::from_evolved(u.matrix() * rho.matrix() * u.matrix().adjoint());
}

}  // namespace sinit
