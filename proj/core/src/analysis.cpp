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

#include "sinit/analysis.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "sinit/states.hpp"

namespace sinit {

namespace {

// Deviations below this Frobenius norm are treated as zero.
constexpr double kZeroDeviation = 1e-14;

Matrix prepared(const Matrix& m, CorrelationMode mode) {
  return mode == CorrelationMode::deviation ? traceless_part(m) : m;
}

double normalized_overlap(const Matrix& a, const Matrix& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na < kZeroDeviation || nb < kZeroDeviation) {
    throw std::domain_error("correlation undefined: operand has zero deviation");
  }
  return (a.adjoint() * b).trace().real() / (na * nb);
}

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("correlation operands differ in dimension");
}

}  // namespace

double correlation(const Matrix& rho, const Matrix& target, CorrelationMode mode) {
  check_same_shape(rho, target);
  return normalized_overlap(prepared(rho, mode), prepared(target, mode));
}

double correlation(const DensityMatrix& rho, const DensityMatrix& target, CorrelationMode mode) {
  return correlation(rho.matrix(), target.matrix(), mode);
}

double diagonal_correlation(const Matrix& rho, const Matrix& target) {
  check_same_shape(rho, target);
  const Matrix a = rho.diagonal().asDiagonal();
  const Matrix b = target.diagonal().asDiagonal();
  return correlation(a, b, CorrelationMode::deviation);
}

double diagonal_correlation(const DensityMatrix& rho, const DensityMatrix& target) {
  return diagonal_correlation(rho.matrix(), target.matrix());
}

Matrix reduced_state(const Matrix& rho, std::span<const int> keep) {
  const auto d = static_cast<std::size_t>(rho.rows());
  if (d == 0 || (d & (d - 1)) != 0 || rho.cols() != rho.rows()) throw std::invalid_argument("state must be 2^n square");
  const int n = std::countr_zero(d);
  std::size_t kept_mask = 0;
  for (int s : keep) {
    check_spin_index(s, n);
    const std::size_t bit = std::size_t{1} << (n - s);
    if (kept_mask & bit) throw std::invalid_argument("repeated spin in partial trace");
    kept_mask |= bit;
  }
  const auto local = [&](std::size_t x) {
    std::size_t code = 0;
    for (int s : keep) code = (code << 1) | static_cast<std::size_t>(spin_bit(x, s, n));
    return code;
  };
  const auto k = static_cast<Eigen::Index>(std::size_t{1} << keep.size());
  Matrix out = Matrix::Zero(k, k);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      if ((x & ~kept_mask) != (y & ~kept_mask)) continue;
      out(static_cast<Eigen::Index>(local(x)), static_cast<Eigen::Index>(local(y))) +=
          rho(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
    }
  }
  return out;
}

double singlet_content(const DensityMatrix& rho, const SpinPair& pair) {
  check_pair_indices(pair, rho.num_spins());
  const std::array<int, 2> keep{pair.first, pair.second};
  const Matrix r = reduced_state(rho.matrix(), keep);
  const Vector s = singlet_triplet_states({1, 2}, 2).singlet;
  return (s.adjoint() * r * s)(0, 0).real();
}

std::map<int, Matrix> coherence_orders(const Matrix& rho) {
  const auto d = static_cast<std::size_t>(rho.rows());
  const int n = std::countr_zero(d);
  std::map<int, Matrix> parts;
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      const int p = (magnetization2(x, n) - magnetization2(y, n)) / 2;
      auto it = parts.find(p);
      if (it == parts.end()) it = parts.emplace(p, Matrix::Zero(rho.rows(), rho.cols())).first;
      it->second(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          rho(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
    }
  }
  return parts;
}

std::map<int, double> coherence_order_norms(const Matrix& rho) {
  std::map<int, double> out;
  for (const auto& [p, m] : coherence_orders(rho)) out[p] = m.norm();
  return out;
}

RealVector diagonal_tomography(const DensityMatrix& rho) { return rho.populations(); }

double epsilon_prime(const DensityMatrix& rho, std::size_t target) {
  const RealVector p = rho.populations();
  if (target >= static_cast<std::size_t>(p.size())) throw std::out_of_range("target index outside the register");
  const double others = (p.sum() - p(static_cast<Eigen::Index>(target))) / static_cast<double>(p.size() - 1);
  return p(static_cast<Eigen::Index>(target)) - others;
}

}  // namespace sinit
