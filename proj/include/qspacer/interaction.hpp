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

// Pair interaction model: the 4x4 diagonal pair Hamiltonian, its split into
// additive and nonadditive parts, the dimensionless coupling and its
// power-law distance decay, and the diagonal error phase over basis states.
// Natural units throughout (hbar = 1, grid spacing 1 unless stated).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qspacer/errors.hpp"

namespace qspacer {

struct InteractionParams {
  double a = 0.0;
  double b = 0.0;
  double tau = 1.0;  // duration of one basic gate step

  void validate() const {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw DomainError("interaction amplitudes must be finite");
    if (!(tau > 0.0) || !std::isfinite(tau))
      throw DomainError("gate step duration tau must be positive");
  }
};

// Energies over |00>, |01>, |10>, |11>.
struct PairHamiltonian {
  std::array<double, 4> diag{};

  friend bool operator==(const PairHamiltonian &, const PairHamiltonian &) =
      default;
};

struct SplitHamiltonian {
  PairHamiltonian additive;
  PairHamiltonian nonadditive;
};

struct CouplingLaw {
  double delta1 = 0.0;  // dimensionless coupling at unit distance
  int exponent = 3;     // 3: dipole, 1: unscreened charge

  void validate() const {
    if (!(delta1 >= 0.0) || !std::isfinite(delta1))
      throw DomainError("coupling delta1 must be finite and >= 0");
    if (exponent < 1) throw DomainError("coupling exponent must be >= 1");
  }
};

struct RegisterLayout {
  std::size_t n_sites = 1;
  double spacing = 1.0;

  void validate() const {
    if (n_sites < 1) throw DomainError("register needs at least one site");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
      throw DomainError("site spacing must be positive");
  }

  // Sites are 1-indexed; site s sits at (s - 1) * spacing.
  double distance(std::size_t site_a, std::size_t site_b) const {
    const auto gap = site_a > site_b ? site_a - site_b : site_b - site_a;
    return static_cast<double>(gap) * spacing;
  }
};

/* A computational basis state, bits[0] is site 1. String form reads left to
 * right from site 1, so "01" has site 2 set. */
struct BasisState {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }

  static BasisState from_string(std::string_view text) {
    BasisState out;
    out.bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1')
        throw DomainError("basis state must contain only '0' and '1': '" +
                          std::string(text) + "'");
      out.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
  }

  /* Dense amplitude index: site 1 is the most significant bit so that index
   * order matches lexicographic bitstring order. */
  static BasisState from_index(std::uint64_t index, std::size_t n) {
    BasisState out;
    out.bits.resize(n);
    for (std::size_t s = 0; s < n; ++s)
      out.bits[s] = static_cast<std::uint8_t>((index >> (n - 1 - s)) & 1U);
    return out;
  }

  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (auto bit : bits) idx = (idx << 1) | (bit & 1U);
    return idx;
  }

  std::string to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (auto bit : bits) out.push_back(bit ? '1' : '0');
    return out;
  }

  friend bool operator==(const BasisState &, const BasisState &) = default;
};

inline PairHamiltonian pair_hamiltonian(const InteractionParams &params) {
  params.validate();
  const double a = params.a;
  const double b = params.b;
  return {{a * a, a * b, a * b, b * b}};
}

/* Additive part diag(a^2, (a^2+b^2)/2, (a^2+b^2)/2, b^2); the nonadditive
 * part is H minus that, so the two always sum back to H. Its middle entries
 * are -(a-b)^2/2. */
inline SplitHamiltonian decompose(const PairHamiltonian &h) {
  const auto &d = h.diag;
  for (double e : d)
    if (!std::isfinite(e)) throw ShapeError("pair Hamiltonian is not finite");
  const double product = d[0] * d[3];
  const double scale = std::max(1.0, std::abs(product));
  if (d[1] != d[2] || d[0] < 0.0 || d[3] < 0.0 ||
      std::abs(d[1] * d[1] - product) > 1e-12 * scale) {
    throw ShapeError(
        "pair Hamiltonian is not of the form diag(a^2, ab, ab, b^2)");
  }
  const double mean = 0.5 * (d[0] + d[3]);
  SplitHamiltonian out;
  out.additive.diag = {d[0], mean, mean, d[3]};
  for (std::size_t i = 0; i < 4; ++i)
    out.nonadditive.diag[i] = d[i] - out.additive.diag[i];
  return out;
}

// Nonadditive angular frequency (a - b)^2 / 2.
inline double delta_omega(const InteractionParams &params) {
  params.validate();
  const double diff = params.a - params.b;
  return 0.5 * diff * diff;
}

// Entangling phase accumulated per basic gate step.
inline double dimensionless_delta(const InteractionParams &params) {
  return params.tau * delta_omega(params);
}

namespace detail {

inline double ipow(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace detail

inline double coupling_strength(const CouplingLaw &law, double distance) {
  law.validate();
  if (!(distance > 0.0) || !std::isfinite(distance))
    throw DomainError("coupling distance must be positive");
  return law.delta1 / detail::ipow(distance, law.exponent);
}

/* Symmetric site-pair coupling table for a layout. Entry (i, j) with i < j
 * (0-based) holds coupling_strength at their distance, or 0 beyond cutoff. */
class CouplingMatrix {
 public:
  CouplingMatrix(const RegisterLayout &layout, const CouplingLaw &law,
                 std::optional<double> cutoff = std::nullopt)
      : n_(layout.n_sites), values_(layout.n_sites * layout.n_sites, 0.0) {
    layout.validate();
    law.validate();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double d = layout.distance(i + 1, j + 1);
        if (cutoff && d > *cutoff) continue;
        const double c = coupling_strength(law, d);
        values_[i * n_ + j] = c;
        values_[j * n_ + i] = c;
      }
    }
  }

  std::size_t size() const { return n_; }

  // 1-indexed sites.
  double operator()(std::size_t site_a, std::size_t site_b) const {
    return values_[(site_a - 1) * n_ + (site_b - 1)];
  }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/* Phase per step for basis state `state`: sum over all site pairs of the
 * pair coupling where the two bits differ. Zero on the all-0 and all-1
 * states and invariant under global complement. */
inline double error_phase(const BasisState &state, const RegisterLayout &layout,
                          const CouplingLaw &law,
                          std::optional<double> cutoff = std::nullopt) {
  if (state.size() != layout.n_sites)
    throw ShapeError("basis state has " + std::to_string(state.size()) +
                     " bits but the layout has " +
                     std::to_string(layout.n_sites) + " sites");
  const CouplingMatrix couplings(layout, law, cutoff);
  double phase = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i)
    for (std::size_t j = i + 1; j < state.size(); ++j)
      if (state.bits[i] != state.bits[j]) phase += couplings(i + 1, j + 1);
  return phase;
}

/* Nonadditive energy E(00) + E(11) - E(01) - E(10) of two dual-rail logical
 * qubits whose first rails are `separation` apart, each pair having rail
 * spacing `rail_spacing` and occupied sites interacting as g / distance.
 * Logical 1 occupies the first rail, logical 0 the second. */
inline double coulomb_nonadditive(double separation, double rail_spacing,
                                  double g) {
  if (!(rail_spacing > 0.0) || !std::isfinite(rail_spacing) ||
      !std::isfinite(separation) || !std::isfinite(g))
    throw GeometryError("rail spacing must be positive and inputs finite");
  if (!(separation > rail_spacing))
    throw GeometryError("dual-rail pairs overlap: separation " +
                        std::to_string(separation) +
                        " must exceed rail spacing " +
                        std::to_string(rail_spacing));
  const double d = separation;
  const double r = rail_spacing;
  return -2.0 * g * r * r / (d * (d - r) * (d + r));
}

}  // namespace qspacer
