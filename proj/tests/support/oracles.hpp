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

// Independent reference implementations for tests. Nothing here calls into
// the library's operator, propagator or channel code.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline constexpr double pi = std::numbers::pi;

inline int bit(std::size_t x, int spin, int n) { return static_cast<int>((x >> (n - spin)) & 1U); }

/// Single-spin 1/2-Pauli element for axis 'x', 'y', 'z'.
inline C half_pauli(char axis, int r, int c) {
  switch (axis) {
    case 'x':
      return r != c ? C(0.5) : C(0.0);
    case 'y':
      return r == c ? C(0.0) : (r == 0 ? C(0.0, -0.5) : C(0.0, 0.5));
    default:
      return r != c ? C(0.0) : (r == 0 ? C(0.5) : C(-0.5));
  }
}

/// I_axis on `spin` of an n-spin register, element by element.
inline M spin_op(int n, int spin, char axis) {
  const auto d = Eigen::Index{1} << n;
  M m = M::Zero(d, d);
  for (Eigen::Index x = 0; x < d; ++x) {
    for (Eigen::Index y = 0; y < d; ++y) {
      bool others_equal = true;
      for (int s = 1; s <= n; ++s) {
        if (s != spin && bit(static_cast<std::size_t>(x), s, n) != bit(static_cast<std::size_t>(y), s, n)) others_equal = false;
      }
      if (others_equal) m(x, y) = half_pauli(axis, bit(static_cast<std::size_t>(x), spin, n), bit(static_cast<std::size_t>(y), spin, n));
    }
  }
  return m;
}

/// exp(-i a G) for Hermitian G by eigendecomposition.
inline M expi(const M& g, double a) {
  Eigen::SelfAdjointEigenSolver<M> es(g);
  const Eigen::VectorXd w = es.eigenvalues();
  V phase(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phase(k) = std::exp(C(0.0, -a * w(k)));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

/// exp(-i 2 pi H t).
inline M evolve(const M& h, double t) { return expi(h, 2.0 * pi * t); }

inline M basis_proj(std::size_t k, Eigen::Index d) {
  M m = M::Zero(d, d);
  m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
  return m;
}

inline V ket(std::initializer_list<C> amps) {
  V v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (C a : amps) v(i++) = a;
  return v;
}

/// |<a|b>| for normalized kets.
inline double overlap(const V& a, const V& b) { return std::abs(a.dot(b)); }

/// Two matrices equal up to a global phase: max |A - e^{i phi} B|.
inline double phase_distance(const M& a, const M& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const C ph = a(r, c) / b(r, c);
  return (a - (ph / std::abs(ph)) * b).cwiseAbs().maxCoeff();
}

/// Reference correlation of traceless parts, written out longhand.
inline double corr(const M& a, const M& b) {
  const auto d = static_cast<double>(a.rows());
  const M ad = a - a.trace() / d * M::Identity(a.rows(), a.cols());
  const M bd = b - b.trace() / d * M::Identity(b.rows(), b.cols());
  return (ad * bd).trace().real() / std::sqrt((ad * ad).trace().real() * (bd * bd).trace().real());
}

/// Hand-rolled generators with a fixed seed.
class Gen {
 public:
  explicit Gen(unsigned seed = 20260101U) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  M ginibre(Eigen::Index d) {
    std::normal_distribution<double> g;
    M m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) m(r, c) = C(g(rng_), g(rng_));
    }
    return m;
  }

  M hermitian(Eigen::Index d, double scale = 1.0) {
    const M g = ginibre(d);
    return scale * 0.5 * (g + g.adjoint());
  }

  /// Full-rank random state with trace 1.
  M density(Eigen::Index d) {
    const M g = ginibre(d);
    M r = g * g.adjoint();
    r /= r.trace().real();
    return 0.5 * (r + r.adjoint());
  }

  /// Random state close to the maximally mixed one, as in NMR.
  M nmr_density(Eigen::Index d, double eps) {
    M r = M::Identity(d, d) / static_cast<double>(d) + eps * (density(d) - M::Identity(d, d) / static_cast<double>(d));
    return 0.5 * (r + r.adjoint());
  }

  /// Random pure state projector.
  M pure(Eigen::Index d) {
    std::normal_distribution<double> g;
    V v(d);
    for (Eigen::Index k = 0; k < d; ++k) v(k) = C(g(rng_), g(rng_));
    v.normalize();
    return v * v.adjoint();
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
