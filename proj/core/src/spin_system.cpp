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

#include "sinit/spin_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sinit {

void check_spin_index(int spin, int num_spins) {
  if (spin < 1 || spin > num_spins) {
    throw std::out_of_range("spin index " + std::to_string(spin) + " outside 1.." +
                            std::to_string(num_spins));
  }
}

void check_pair_indices(const SpinPair& pair, int num_spins) {
  check_spin_index(pair.first, num_spins);
  check_spin_index(pair.second, num_spins);
  if (pair.first == pair.second) {
    throw std::invalid_argument("spin pair " + to_string(pair) + " must name two distinct spins");
  }
}

SpinSystem::SpinSystem(std::vector<double> shifts_hz, RealMatrix couplings_hz,
                       std::vector<double> epsilon)
    : shifts_(std::move(shifts_hz)), couplings_(std::move(couplings_hz)), epsilon_(std::move(epsilon)) {
  const auto n = static_cast<Eigen::Index>(shifts_.size());
  if (n < 1) throw std::invalid_argument("spin system needs at least one spin");
  if (n > kMaxSpins) {
    throw std::invalid_argument("register of " + std::to_string(n) +
                                " spins exceeds the dense limit of " + std::to_string(kMaxSpins));
  }
  if (couplings_.rows() != n || couplings_.cols() != n) {
    throw std::invalid_argument("couplings must be a " + std::to_string(n) + "x" +
                                std::to_string(n) + " matrix");
  }
  if (static_cast<Eigen::Index>(epsilon_.size()) != n) {
    throw std::invalid_argument("epsilon must have one entry per spin");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (couplings_(i, i) != 0.0) {
      throw std::invalid_argument("couplings diagonal must be zero (spin " + std::to_string(i + 1) + ")");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (couplings_(i, j) != couplings_(j, i)) {
        throw std::invalid_argument("couplings must be symmetric (spins " + std::to_string(i + 1) +
                                    "," + std::to_string(j + 1) + ")");
      }
    }
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(shifts_.begin(), shifts_.end(), finite) ||
      !std::all_of(epsilon_.begin(), epsilon_.end(), finite) || !couplings_.allFinite()) {
    throw std::invalid_argument("spin system parameters must be finite");
  }
}

SpinSystem SpinSystem::uncoupled(int num_spins) {
  if (num_spins < 1) throw std::invalid_argument("spin system needs at least one spin");
  const auto n = static_cast<std::size_t>(num_spins);
  return SpinSystem(std::vector<double>(n, 0.0), RealMatrix::Zero(num_spins, num_spins),
                    std::vector<double>(n, 0.0));
}

double SpinSystem::shift(int spin) const {
  check_spin(spin);
  return shifts_[static_cast<std::size_t>(spin - 1)];
}

double SpinSystem::coupling(int a, int b) const {
  check_spin(a);
  check_spin(b);
  return couplings_(a - 1, b - 1);
}

double SpinSystem::epsilon(int spin) const {
  check_spin(spin);
  return epsilon_[static_cast<std::size_t>(spin - 1)];
}

void SpinSystem::check_spin(int spin) const { check_spin_index(spin, size()); }

void SpinSystem::check_pair(const SpinPair& pair) const { check_pair_indices(pair, size()); }

void SpinSystem::check_spins(std::span<const int> spins) const {
  if (spins.empty()) throw std::invalid_argument("spin set must not be empty");
  std::vector<int> seen;
  for (int s : spins) {
    check_spin(s);
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) {
      throw std::invalid_argument("spin " + std::to_string(s) + " listed twice");
    }
    seen.push_back(s);
  }
}

}  // namespace sinit
