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

#include <array>
#include <cstddef>

#include "sinit/density_matrix.hpp"
#include "sinit/spin_system.hpp"

namespace sinit {

/// 2^-n (1 + sum_j eps_j I_z^j): the high-temperature expansion of the
/// Boltzmann state.
DensityMatrix equilibrium_state(const SpinSystem& system);

/// 2^-n [(1 - eps') 1 + 2^n eps' |ket><ket|] for a computational basis ket.
DensityMatrix pseudopure_state(std::size_t ket, int num_spins, double eps_prime);

DensityMatrix maximally_mixed(int num_spins);

/// |psi><psi| for a normalized state vector.
DensityMatrix pure_state(const Vector& psi);

enum class PairState { singlet, triplet_plus, triplet_zero, triplet_minus };

/// Two-spin states in the |00>,|01>,|10>,|11> basis of a pair.
struct SingletTripletBasis {
  Vector singlet;        // (|01> - |10>)/sqrt2
  Vector triplet_plus;   // |00>
  Vector triplet_zero;   // (|01> + |10>)/sqrt2
  Vector triplet_minus;  // |11>

  const Vector& operator[](PairState s) const;
};

SingletTripletBasis singlet_triplet_states(const SpinPair& pair, int num_spins);

/// Projector onto one singlet/triplet state of `pair`, identity on spectators.
Matrix pair_projector(const SpinPair& pair, int num_spins, PairState state);

/// 4x4 change of basis whose columns, indexed by the pair code 2a+b, are
/// T+ (00), S0 (01), T0 (10), T- (11).
Matrix singlet_triplet_transform();

/// Pair code (2a + b) holding each singlet/triplet state in the transform.
int pair_code(PairState state);

enum class BellState { psi_plus, phi_plus, phi_minus };

/// Bell state on a pair, in the pair's 4-dim basis.
Vector bell_state(BellState state);

/// Full-register ket with the pair in `pair_ket` (4-vector) and every other
/// spin in the given computational bits (bits for the pair positions ignored).
Vector embed_pair_ket(const Vector& pair_ket, const SpinPair& pair, int num_spins, std::size_t spectator_bits = 0);

}  // namespace sinit
