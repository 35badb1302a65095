// Copyright 2026 The qspacer Authors
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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qspacer/circuit.hpp"
#include "qspacer/errors.hpp"
#include "qspacer/interaction.hpp"

namespace qspacer {

inline constexpr std::size_t kMaxQubits = 24;

/* Dense pure state over n qubits. Site 1 is the most significant bit of the
 * amplitude index (see BasisState::index). */
class StateVector {
 public:
  explicit StateVector(std::size_t n) : n_(n) {
    check_capacity(n);
    amps_.assign(std::size_t{1} << n, Complex(0.0));
    amps_[0] = 1.0;
  }

  static StateVector basis(const BasisState &state) {
    StateVector out(state.size());
    out.amps_[0] = 0.0;
    out.amps_[state.index()] = 1.0;
    return out;
  }

  static StateVector from_amplitudes(std::vector<Complex> amps) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amps.size()) ++n;
    if (amps.empty() || (std::size_t{1} << n) != amps.size())
      throw ShapeError("amplitude count must be a power of two");
    StateVector out(n);
    out.amps_ = std::move(amps);
    if (std::abs(out.norm() - 1.0) > 1e-12)
      throw DomainError("amplitudes are not normalised");
    return out;
  }

  static void check_capacity(std::size_t n) {
    if (n > kMaxQubits)
      throw CapacityError("register of " + std::to_string(n) +
                          " qubits exceeds the dense limit of " +
                          std::to_string(kMaxQubits));
  }

  std::size_t qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_[index]; }
  Complex amplitude(const BasisState &state) const {
    check_size(state.size());
    return amps_[state.index()];
  }

  // Fixed summation order, so repeated calls agree bitwise.
  double norm() const {
    double acc = 0.0;
    for (const auto &a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
  }

  std::uint64_t site_mask(std::size_t site) const {
    check_site(site);
    return std::uint64_t{1} << (n_ - site);
  }

  void apply_one(std::size_t site, const Matrix2 &u) {
    const std::uint64_t bit = site_mask(site);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
      if (i & bit) continue;
      const Complex a0 = amps_[i];
      const Complex a1 = amps_[i | bit];
      amps_[i] = u[0] * a0 + u[1] * a1;
      amps_[i | bit] = u[2] * a0 + u[3] * a1;
    }
  }

  // u acts on |x_first x_second> with x_first the high bit of its index.
  void apply_two(std::size_t first, std::size_t second, const Matrix4 &u) {
    if (first == second) throw DomainError("two-qubit gate on a single site");
    const std::uint64_t hi = site_mask(first);
    const std::uint64_t lo = site_mask(second);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
      if (i & (hi | lo)) continue;
      const std::uint64_t idx[4] = {i, i | lo, i | hi, i | hi | lo};
      Complex in[4];
      for (int r = 0; r < 4; ++r) in[r] = amps_[idx[r]];
      for (int r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += u[r * 4 + c] * in[c];
        amps_[idx[r]] = acc;
      }
    }
  }

  void apply_swap(std::size_t site_a, std::size_t site_b) {
    const std::uint64_t ma = site_mask(site_a);
    const std::uint64_t mb = site_mask(site_b);
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
      if ((i & ma) && !(i & mb)) std::swap(amps_[i], amps_[(i & ~ma) | mb]);
  }

  // Multiplies every amplitude by the matching entry of `factors`.
  void apply_diagonal(std::span<const Complex> factors) {
    if (factors.size() != amps_.size())
      throw ShapeError("diagonal has wrong dimension");
    for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] *= factors[i];
  }

 private:
  void check_site(std::size_t site) const {
    if (site < 1 || site > n_)
      throw DomainError("site " + std::to_string(site) + " outside " +
                        std::to_string(n_) + "-qubit register");
  }
  void check_size(std::size_t n) const {
    if (n != n_)
      throw ShapeError("basis state has " + std::to_string(n) +
                       " bits, register has " + std::to_string(n_));
  }

  std::size_t n_;
  std::vector<Complex> amps_;
};

inline StateVector &apply_gate(StateVector &state, const PhysicalGate &gate) {
  std::visit(overloaded{
                 [&](const OneQubitGate &g) {
                   if (!is_unitary(g.matrix, 2))
                     throw DomainError("one-qubit matrix is not unitary");
                   state.apply_one(g.target, g.matrix);
                 },
                 [&](const TwoQubitGate &g) {
                   if (!is_unitary(g.matrix, 4))
                     throw DomainError("two-qubit matrix is not unitary");
                   state.apply_two(g.target, g.target + 1, g.matrix);
                 },
                 [&](const SwapGate &g) {
                   state.apply_swap(g.target, g.target + 1);
                 },
                 [](const WaitGate &) {}},
             gate);
  return state;
}

/* Removes the global phase by rotating the largest-magnitude amplitude (first
 * by index on ties) onto the positive real axis. */
inline StateVector align_global_phase(StateVector state) {
  auto amps = state.amplitudes();
  std::size_t best = 0;
  for (std::size_t i = 1; i < amps.size(); ++i)
    if (std::abs(amps[i]) > std::abs(amps[best]) + 1e-15) best = i;
  if (std::abs(amps[best]) == 0.0) return state;
  const Complex rot = std::conj(amps[best]) / std::abs(amps[best]);
  for (auto &a : amps) a *= rot;
  return state;
}

inline double max_abs_diff(const StateVector &a, const StateVector &b) {
  if (a.dimension() != b.dimension())
    throw ShapeError("state dimensions differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    worst = std::max(worst, std::abs(a.amplitude(i) - b.amplitude(i)));
  return worst;
}

/* Distance after rotating both states so that the amplitude at a's
 * largest-magnitude index is real and positive. Using one index for both
 * keeps near-ties from picking different reference amplitudes. */
inline double max_abs_diff_up_to_phase(const StateVector &a,
                                       const StateVector &b) {
  if (a.dimension() != b.dimension())
    throw ShapeError("state dimensions differ");
  std::size_t ref = 0;
  for (std::size_t i = 1; i < a.dimension(); ++i)
    if (std::abs(a.amplitude(i)) > std::abs(a.amplitude(ref)) + 1e-15) ref = i;
  auto unit = [](Complex z) {
    const double r = std::abs(z);
    return r == 0.0 ? Complex(1.0) : std::conj(z) / r;
  };
  const Complex ra = unit(a.amplitude(ref));
  const Complex rb = unit(b.amplitude(ref));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    worst = std::max(worst,
                     std::abs(a.amplitude(i) * ra - b.amplitude(i) * rb));
  return worst;
}

}  // namespace qspacer
