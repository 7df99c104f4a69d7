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

#include "sinit/linalg.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace sinit {

std::string to_string(Axis axis) {
  switch (axis) {
    case Axis::x:
      return "x";
    case Axis::y:
      return "y";
    case Axis::z:
      return "z";
  }
  return "?";
}

std::string to_string(const SpinPair& pair) {
  return "(" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")";
}

double hermiticity_error(const Matrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  if (u.size() == 0) return 0.0;
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double hs_inner(const Matrix& a, const Matrix& b) {
  return (a.adjoint() * b).trace().real();
}

Matrix traceless_part(const Matrix& a) {
  const auto d = static_cast<double>(a.rows());
  return a - (a.trace() / d) * Matrix::Identity(a.rows(), a.cols());
}

int magnetization2(std::size_t index, int num_spins) {
  const int ones = std::popcount(index);
  return num_spins - 2 * ones;
}

std::size_t basis_index(const std::string& bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxSpins)) {
    throw std::invalid_argument("basis label must have 1.." + std::to_string(kMaxSpins) +
                                " bits: '" + bits + "'");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis label may only contain 0 and 1: '" + bits + "'");
    }
    index = (index << 1U) | static_cast<std::size_t>(c - '0');
  }
  return index;
}

std::string basis_label(std::size_t index, int num_spins) {
  std::string out(static_cast<std::size_t>(num_spins), '0');
  for (int s = 1; s <= num_spins; ++s) {
    out[static_cast<std::size_t>(s - 1)] = spin_bit(index, s, num_spins) ? '1' : '0';
  }
  return out;
}

}  // namespace sinit
