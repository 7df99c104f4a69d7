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

#include "sinit/relaxation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "sinit/states.hpp"

namespace sinit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_time_constant(double v, const std::string& what) {
  if (!(v > 0.0)) throw std::invalid_argument(what + " must be > 0");
}

bool same_pair(const SpinPair& a, const SpinPair& b) {
  return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

// Applies a real 2^k x 2^k map to the population vector on the listed spins.
void apply_population_map(RealVector& p, const RealMatrix& m, std::span<const int> spins, int n) {
  const std::size_t dim = p.size();
  const int k = static_cast<int>(spins.size());
  std::size_t mask = 0;
  for (int s : spins) mask |= std::size_t{1} << (n - s);
  const auto place = [&](std::size_t base, std::size_t code) {
    std::size_t x = base;
    for (int i = k - 1; i >= 0; --i, code >>= 1) {
      if (code & 1) x |= std::size_t{1} << (n - spins[static_cast<std::size_t>(i)]);
    }
    return x;
  };
  RealVector out = RealVector::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    if (x & mask) continue;
    const std::size_t local = std::size_t{1} << k;
    for (std::size_t r = 0; r < local; ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < local; ++c) {
        acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * p(static_cast<Eigen::Index>(place(x, c)));
      }
      out(static_cast<Eigen::Index>(place(x, r))) = acc;
    }
  }
  p = std::move(out);
}

// Population transfer on one locked pair, in ST order (T+, S, T0, T-).
RealMatrix pair_population_map(double t, double ts, double t1) {
  const double a = decay(t, ts);
  const double b = decay(t, t1);
  RealVector v(4);
  v << -1.0 / 3.0, 1.0, -1.0 / 3.0, -1.0 / 3.0;
  const RealMatrix uniform = RealMatrix::Constant(4, 4, 0.25);
  const RealMatrix singlet_order = v * v.transpose() / v.squaredNorm();
  return uniform + a * singlet_order + b * (RealMatrix::Identity(4, 4) - uniform - singlet_order);
}

std::vector<int> locked_spins(const SpinLockSpec& spec, int n) {
  if (spec.pairs.empty()) throw std::invalid_argument("spin-lock needs at least one pair");
  std::set<int> seen;
  std::vector<int> spins;
  for (const auto& pr : spec.pairs) {
    check_pair_indices(pr, n);
    for (int s : {pr.first, pr.second}) {
      if (!seen.insert(s).second) throw std::invalid_argument("locked pairs must not share spins");
      spins.push_back(s);
    }
  }
  return spins;
}

}  // namespace

RelaxationModel::RelaxationModel(std::vector<double> t1, std::vector<double> t2, std::vector<SingletDecay> singlets)
    : t1_(std::move(t1)), t2_(std::move(t2)), singlets_(std::move(singlets)) {
  if (t1_.empty() || static_cast<int>(t1_.size()) > kMaxSpins) throw std::invalid_argument("t1 must list 1..8 spins");
  if (t2_.empty()) t2_ = t1_;
  if (t2_.size() != t1_.size()) throw std::invalid_argument("t2 must have one entry per spin");
  for (std::size_t j = 0; j < t1_.size(); ++j) {
    check_time_constant(t1_[j], "t1");
    check_time_constant(t2_[j], "t2");
    if (t2_[j] > 2.0 * t1_[j]) throw std::invalid_argument("t2 must not exceed 2*t1 (spin " + std::to_string(j + 1) + ")");
  }
  const int n = size();
  for (std::size_t i = 0; i < singlets_.size(); ++i) {
    const auto& s = singlets_[i];
    check_pair_indices(s.pair, n);
    check_time_constant(s.ts, "ts");
    if (s.t_lock_coh) check_time_constant(*s.t_lock_coh, "t_lock_coh");
    for (std::size_t k = 0; k < i; ++k) {
      if (same_pair(singlets_[k].pair, s.pair)) throw std::invalid_argument("duplicate singlet pair " + to_string(s.pair));
    }
  }
}

RelaxationModel RelaxationModel::ideal_limit(int num_spins, std::span<const SpinPair> pairs) {
  constexpr double kFast = 1e-9;
  std::vector<SingletDecay> singlets;
  for (const auto& p : pairs) singlets.push_back({p, kInf, kFast});
  return RelaxationModel(std::vector<double>(static_cast<std::size_t>(num_spins), kFast), {}, std::move(singlets));
}

double RelaxationModel::t1(int spin) const {
  check_spin_index(spin, size());
  return t1_[static_cast<std::size_t>(spin - 1)];
}

double RelaxationModel::t2(int spin) const {
  check_spin_index(spin, size());
  return t2_[static_cast<std::size_t>(spin - 1)];
}

bool RelaxationModel::has_pair(const SpinPair& pair) const {
  return std::any_of(singlets_.begin(), singlets_.end(), [&](const SingletDecay& s) { return same_pair(s.pair, pair); });
}

const SingletDecay& RelaxationModel::entry(const SpinPair& pair) const {
  for (const auto& s : singlets_) {
    if (same_pair(s.pair, pair)) return s;
  }
  throw std::invalid_argument("relaxation model has no singlet entry for pair " + to_string(pair));
}

double RelaxationModel::ts(const SpinPair& pair) const { return entry(pair).ts; }

double RelaxationModel::t_lock_coh(const SpinPair& pair) const {
  const auto& e = entry(pair);
  if (e.t_lock_coh) return *e.t_lock_coh;
  return std::min(t2(pair.first), t2(pair.second));
}

std::string to_string(LockSequence seq) { return seq == LockSequence::cw ? "CW" : "WALTZ-16"; }

LockSequence parse_lock_sequence(const std::string& name) {
  if (name == "CW" || name == "cw") return LockSequence::cw;
  if (name == "WALTZ-16" || name == "waltz16" || name == "waltz-16") return LockSequence::waltz16;
  throw std::invalid_argument("unknown lock sequence '" + name + "' (expected CW or WALTZ-16)");
}

double decay(double t, double tau) {
  if (t == 0.0) return 1.0;
  return std::exp(-t / tau);
}

double effective_lock_coherence_time(const SpinLockSpec& spec, const RelaxationModel& model) {
  double tcoh = kInf;
  double kappa = 0.0;
  for (const auto& p : spec.pairs) {
    tcoh = std::min(tcoh, model.t_lock_coh(p));
    const double ts = model.ts(p);
    const double t1 = std::min(model.t1(p.first), model.t1(p.second));
    kappa += std::max(0.75 / ts, 1.0 / (12.0 * ts) + 2.0 / (3.0 * t1));
  }
  return kappa > 0.0 ? std::min(tcoh, 1.0 / kappa) : tcoh;
}

DensityMatrix spin_lock(const DensityMatrix& rho, const SpinLockSpec& spec, const RelaxationModel& model) {
  const int n = rho.num_spins();
  if (model.size() != n) throw std::invalid_argument("relaxation model size does not match the state");
  if (!(spec.duration_s >= 0.0) || !std::isfinite(spec.duration_s)) throw std::invalid_argument("lock duration must be >= 0");
  const auto spins = locked_spins(spec, n);
  const double t = spec.duration_s;
  const double tcoh = effective_lock_coherence_time(spec, model);
  if (t == 0.0) return rho;

  const Eigen::Index d = rho.dim();
  Matrix w = Matrix::Identity(d, d);
  const Matrix st = singlet_triplet_transform();
  for (const auto& p : spec.pairs) w = w * embed_pair_operator(st, p, n);

  Matrix r = w.adjoint() * rho.matrix() * w;
  RealVector pops = r.diagonal().real();
  r *= decay(t, tcoh);
  for (const auto& p : spec.pairs) {
    const double t1 = std::min(model.t1(p.first), model.t1(p.second));
    const std::array<int, 2> ps{p.first, p.second};
    apply_population_map(pops, pair_population_map(t, model.ts(p), t1), ps, n);
  }
  r.diagonal() = pops.cast<Complex>();
  return DensityMatrix::from_evolved(w * r * w.adjoint());
}

DensityMatrix free_relaxation(const DensityMatrix& rho, double duration, const RelaxationModel& model) {
  std::vector<int> all(static_cast<std::size_t>(rho.num_spins()));
  for (int j = 0; j < rho.num_spins(); ++j) all[static_cast<std::size_t>(j)] = j + 1;
  return free_relaxation(rho, duration, model, all);
}

DensityMatrix free_relaxation(const DensityMatrix& rho, double duration, const RelaxationModel& model,
                              std::span<const int> spins) {
  const int n = rho.num_spins();
  if (model.size() != n) throw std::invalid_argument("relaxation model size does not match the state");
  if (!(duration >= 0.0) || !std::isfinite(duration)) throw std::invalid_argument("duration must be >= 0");
  if (duration == 0.0 || spins.empty()) return rho;
  Matrix r = rho.matrix();
  const auto d = static_cast<std::size_t>(rho.dim());
  for (int s : spins) {
    check_spin_index(s, n);
    const double e1 = decay(duration, model.t1(s));
    const double e2 = decay(duration, model.t2(s));
    const double keep = 0.5 * (1.0 + e1);
    const double move = 0.5 * (1.0 - e1);
    const std::size_t m = std::size_t{1} << (n - s);
    Matrix out(r.rows(), r.cols());
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        const auto xi = static_cast<Eigen::Index>(x);
        const auto yi = static_cast<Eigen::Index>(y);
        if (((x ^ y) & m) == 0) {
          out(xi, yi) = keep * r(xi, yi) + move * r(static_cast<Eigen::Index>(x ^ m), static_cast<Eigen::Index>(y ^ m));
        } else {
          out(xi, yi) = e2 * r(xi, yi);
        }
      }
    }
    r = std::move(out);
  }
  return DensityMatrix::from_evolved(r);
}

DensityMatrix gradient_crush(const DensityMatrix& rho, CrushMode mode) {
  const int n = rho.num_spins();
  Matrix r = rho.matrix();
  for (Eigen::Index x = 0; x < r.rows(); ++x) {
    for (Eigen::Index y = 0; y < r.cols(); ++y) {
      if (x == y) continue;
      const bool kill = mode == CrushMode::strict ||
                        magnetization2(static_cast<std::size_t>(x), n) != magnetization2(static_cast<std::size_t>(y), n);
      if (kill) r(x, y) = 0.0;
    }
  }
  return DensityMatrix::from_evolved(r);
}

double depolarizing_strength(double fidelity, Eigen::Index dim) {
  if (!(fidelity > 0.0 && fidelity <= 1.0)) throw std::invalid_argument("gate fidelity must lie in (0, 1]");
  const double d2 = static_cast<double>(dim) * static_cast<double>(dim);
  return std::clamp((1.0 - fidelity) * d2 / (d2 - 1.0), 0.0, 1.0);
}

DensityMatrix noisy_gate(const DensityMatrix& rho, const Propagator& u, double fidelity) {
  const double lambda = depolarizing_strength(fidelity, rho.dim());
  const DensityMatrix out = apply(u, rho);
  if (lambda == 0.0) return out;
  const Eigen::Index d = rho.dim();
  return DensityMatrix::from_evolved((1.0 - lambda) * out.matrix() +
                                     lambda * Matrix::Identity(d, d) / static_cast<double>(d));
}

}  // namespace sinit
