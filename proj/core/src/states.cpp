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

#include "sinit/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sinit/operators.hpp"

namespace sinit {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Vector basis4(Complex c00, Complex c01, Complex c10, Complex c11) {
  Vector v(4);
  v << c00, c01, c10, c11;
  return v;
}

}  // namespace

DensityMatrix equilibrium_state(const SpinSystem& system) {
  const int n = system.size();
  const auto dim = static_cast<Eigen::Index>(system.dim());
  Matrix rho = Matrix::Identity(dim, dim);
  for (int j = 1; j <= n; ++j) {
    rho += system.epsilon(j) * spin_operator(n, j, Axis::z).matrix();
  }
  rho /= static_cast<double>(dim);
  return DensityMatrix(std::move(rho));
}

DensityMatrix pseudopure_state(std::size_t ket, int num_spins, double eps_prime) {
  if (num_spins < 1 || num_spins > kMaxSpins) throw std::invalid_argument("invalid register size");
  const std::size_t dim = std::size_t{1} << num_spins;
  if (ket >= dim) {
    throw std::out_of_range("basis index " + std::to_string(ket) + " outside register of dim " +
                            std::to_string(dim));
  }
  if (!(eps_prime >= 0.0 && eps_prime <= 1.0)) {
    throw std::invalid_argument("retained polarization must lie in [0, 1]");
  }
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix rho = Matrix::Identity(d, d) * ((1.0 - eps_prime) / static_cast<double>(dim));
  rho(static_cast<Eigen::Index>(ket), static_cast<Eigen::Index>(ket)) += eps_prime;
  return DensityMatrix(std::move(rho));
}

DensityMatrix maximally_mixed(int num_spins) {
  if (num_spins < 1 || num_spins > kMaxSpins) throw std::invalid_argument("invalid register size");
  const auto d = Eigen::Index{1} << num_spins;
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix pure_state(const Vector& psi) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) throw std::invalid_argument("state vector must be normalized");
  return DensityMatrix::from_evolved(psi * psi.adjoint());
}

const Vector& SingletTripletBasis::operator[](PairState s) const {
  switch (s) {
    case PairState::singlet:
      return singlet;
    case PairState::triplet_plus:
      return triplet_plus;
    case PairState::triplet_zero:
      return triplet_zero;
    case PairState::triplet_minus:
      return triplet_minus;
  }
  throw std::invalid_argument("unknown pair state");
}

SingletTripletBasis singlet_triplet_states(const SpinPair& pair, int num_spins) {
  check_pair_indices(pair, num_spins);
  return SingletTripletBasis{
      basis4(0.0, kInvSqrt2, -kInvSqrt2, 0.0),
      basis4(1.0, 0.0, 0.0, 0.0),
      basis4(0.0, kInvSqrt2, kInvSqrt2, 0.0),
      basis4(0.0, 0.0, 0.0, 1.0),
  };
}

Matrix pair_projector(const SpinPair& pair, int num_spins, PairState state) {
  const auto basis = singlet_triplet_states(pair, num_spins);
  const Vector& v = basis[state];
  return embed_pair_operator(v * v.adjoint(), pair, num_spins);
}

Matrix singlet_triplet_transform() {
  const auto b = singlet_triplet_states({1, 2}, 2);
  Matrix w(4, 4);
  w.col(pair_code(PairState::triplet_plus)) = b.triplet_plus;
  w.col(pair_code(PairState::singlet)) = b.singlet;
  w.col(pair_code(PairState::triplet_zero)) = b.triplet_zero;
  w.col(pair_code(PairState::triplet_minus)) = b.triplet_minus;
  return w;
}

int pair_code(PairState state) {
  switch (state) {
    case PairState::triplet_plus:
      return 0;
    case PairState::singlet:
      return 1;
    case PairState::triplet_zero:
      return 2;
    case PairState::triplet_minus:
      return 3;
  }
  throw std::invalid_argument("unknown pair state");
}

Vector bell_state(BellState state) {
  switch (state) {
    case BellState::psi_plus:
      return basis4(0.0, kInvSqrt2, kInvSqrt2, 0.0);
    case BellState::phi_plus:
      return basis4(kInvSqrt2, 0.0, 0.0, kInvSqrt2);
    case BellState::phi_minus:
      return basis4(kInvSqrt2, 0.0, 0.0, -kInvSqrt2);
  }
  throw std::invalid_argument("unknown Bell state");
}

Vector embed_pair_ket(const Vector& pair_ket, const SpinPair& pair, int num_spins, std::size_t spectator_bits) {
  check_pair_indices(pair, num_spins);
  if (pair_ket.size() != 4) throw std::invalid_argument("pair ket must have 4 components");
  const std::size_t dim = std::size_t{1} << num_spins;
  const std::size_t mask_a = std::size_t{1} << (num_spins - pair.first);
  const std::size_t mask_b = std::size_t{1} << (num_spins - pair.second);
  const std::size_t rest = spectator_bits & ~(mask_a | mask_b) & (dim - 1);
  Vector out = Vector::Zero(static_cast<Eigen::Index>(dim));
  for (int code = 0; code < 4; ++code) {
    std::size_t idx = rest;
    if (code & 2) idx |= mask_a;
    if (code & 1) idx |= mask_b;
    out(static_cast<Eigen::Index>(idx)) = pair_ket(code);
  }
  return out;
}

}  // namespace sinit
