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

#include "sinit/hamiltonian.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace sinit {

Hamiltonian::Hamiltonian(Matrix data, std::string label) : data_(std::move(data)), label_(std::move(label)) {
  if (data_.rows() != data_.cols()) throw std::invalid_argument("Hamiltonian must be square");
  if (hermiticity_error(data_) > kHermitianTolerance) {
    throw std::invalid_argument("Hamiltonian '" + label_ + "' is not Hermitian");
  }
}

Hamiltonian Hamiltonian::operator+(const Hamiltonian& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("Hamiltonian dimension mismatch");
  return Hamiltonian(data_ + other.data_, label_ + "+" + other.label_);
}

Hamiltonian zeeman_hamiltonian(const SpinSystem& system, bool weak_coupling) {
  const int n = system.size();
  const auto d = static_cast<Eigen::Index>(system.dim());
  Matrix h = Matrix::Zero(d, d);
  for (int j = 1; j <= n; ++j) h += system.shift(j) * spin_operator(n, j, Axis::z).matrix();
  if (weak_coupling) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const double jjk = system.coupling(j, k);
        if (jjk != 0.0) h += jjk * zz_product(n, {j, k}).matrix();
      }
    }
  }
  return Hamiltonian(std::move(h), weak_coupling ? "zeeman+weak-J" : "zeeman");
}

Hamiltonian effective_hamiltonian(const SpinSystem& system, const SpinPair& pair, double rf_amplitude_hz) {
  system.check_pair(pair);
  const int n = system.size();
  const double dnu = system.shift(pair.first) - system.shift(pair.second);
  const std::array<int, 2> spins{pair.first, pair.second};
  Matrix h = 0.5 * dnu * z_difference(n, pair).matrix() +
             system.coupling(pair.first, pair.second) * scalar_product(n, pair).matrix() +
             rf_amplitude_hz * collective_operator(n, spins, Axis::x).matrix();
  return Hamiltonian(std::move(h), "effective" + to_string(pair));
}

Hamiltonian equivalence_hamiltonian(const SpinSystem& system, const SpinPair& pair) {
  system.check_pair(pair);
  return Hamiltonian(system.coupling(pair.first, pair.second) * scalar_product(system.size(), pair).matrix(),
                     "equivalence" + to_string(pair));
}

Hamiltonian coupling_hamiltonian(const SpinSystem& system, const SpinPair& pair) {
  system.check_pair(pair);
  return Hamiltonian(system.coupling(pair.first, pair.second) * zz_product(system.size(), pair).matrix(),
                     "coupling" + to_string(pair));
}

}  // namespace sinit
