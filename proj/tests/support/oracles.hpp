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

// Test-only reference implementations. Nothing here calls into the
// simulator kernels it is used to check: states evolve by explicit dense
// matrices built column by column from basis states, phases are summed pair
// by pair from bitstrings.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qspacer/circuit.hpp"
#include "qspacer/interaction.hpp"

namespace qspacer::oracle {

using Vec = std::vector<Complex>;
using Dense = std::vector<Vec>;  // rows

// Bit of site s (1-based) in an n-site index, site 1 most significant.
inline int site_bit(std::uint64_t idx, std::size_t n, std::size_t s) {
  return static_cast<int>((idx >> (n - s)) & 1U);
}

inline std::uint64_t with_bit(std::uint64_t idx, std::size_t n, std::size_t s,
                              int value) {
  const std::uint64_t mask = std::uint64_t{1} << (n - s);
  return value ? (idx | mask) : (idx & ~mask);
}

// Full 2^n x 2^n matrix of a one- or two-site gate.
inline Dense embed(std::size_t n, const std::vector<std::size_t> &sites,
                   const std::vector<Complex> &u) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t k = sites.size();
  const std::size_t local = std::size_t{1} << k;
  Dense out(dim, Vec(dim, 0.0));
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::size_t in = 0;
    for (std::size_t q = 0; q < k; ++q)
      in = (in << 1) | static_cast<std::size_t>(site_bit(col, n, sites[q]));
    for (std::size_t o = 0; o < local; ++o) {
      std::uint64_t row = col;
      for (std::size_t q = 0; q < k; ++q)
        row = with_bit(row, n, sites[q], static_cast<int>((o >> (k - 1 - q)) & 1U));
      out[row][col] += u[o * local + in];
    }
  }
  return out;
}

inline Vec multiply(const Dense &m, const Vec &v) {
  Vec out(v.size(), 0.0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

inline Vec basis_vector(std::size_t n, std::uint64_t idx) {
  Vec v(std::size_t{1} << n, 0.0);
  v[idx] = 1.0;
  return v;
}

// Pair-by-pair phase of a basis index.
inline double brute_phase(std::uint64_t idx, std::size_t n,
                          const CouplingLaw &law, double spacing = 1.0) {
  double phi = 0.0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (site_bit(idx, n, i) != site_bit(idx, n, j))
        phi += law.delta1 /
               std::pow(static_cast<double>(j - i) * spacing, law.exponent);
  return phi;
}

inline Vec apply_error(const Vec &v, std::size_t n, const CouplingLaw &law) {
  Vec out = v;
  for (std::uint64_t i = 0; i < v.size(); ++i)
    out[i] *= std::polar(1.0, -brute_phase(i, n, law));
  return out;
}

/* Lab-frame evolution of a physical circuit with an error step after every
 * basic gate and every wait step. */
inline Vec evolve(const PhysicalCircuit &c, const CouplingLaw &law, Vec v) {
  const std::size_t n = c.qubits;
  for (const auto &gate : c.gates) {
    if (const auto *w = std::get_if<WaitGate>(&gate)) {
      for (std::size_t s = 0; s < w->steps; ++s) v = apply_error(v, n, law);
      continue;
    }
    if (const auto *g = std::get_if<OneQubitGate>(&gate)) {
      v = multiply(embed(n, {g->target}, {g->matrix.begin(), g->matrix.end()}), v);
    } else if (const auto *g2 = std::get_if<TwoQubitGate>(&gate)) {
      v = multiply(embed(n, {g2->target, g2->target + 1},
                         {g2->matrix.begin(), g2->matrix.end()}),
                   v);
    } else if (const auto *s = std::get_if<SwapGate>(&gate)) {
      const auto sw = gates::swap();
      v = multiply(embed(n, {s->target, s->target + 1}, {sw.begin(), sw.end()}), v);
    }
    v = apply_error(v, n, law);
  }
  return v;
}

// Ideal logical evolution, no error steps.
inline Vec evolve_ideal(const LogicalCircuit &c, Vec v) {
  const std::size_t n = c.qubits;
  for (const auto &gate : c.gates) {
    if (const auto *g = std::get_if<OneQubitGate>(&gate))
      v = multiply(embed(n, {g->target}, {g->matrix.begin(), g->matrix.end()}), v);
    else if (const auto *g2 = std::get_if<TwoQubitGate>(&gate))
      v = multiply(embed(n, {g2->target, g2->target + 1},
                         {g2->matrix.begin(), g2->matrix.end()}),
                   v);
  }
  return v;
}

/* Dual-rail nonadditive energy from the four occupied-site configurations:
 * logical 1 sits on the first rail of its pair, logical 0 on the second. */
inline double coulomb_four_configs(double D, double r, double g) {
  auto site = [&](double origin, int bit) { return bit ? origin : origin + r; };
  auto energy = [&](int a, int b) {
    return g / std::abs(site(D, b) - site(0.0, a));
  };
  return energy(0, 0) + energy(1, 1) - energy(0, 1) - energy(1, 0);
}

// Haar-ish random unitary by Gram-Schmidt on a complex Gaussian matrix.
template <std::size_t Dim>
std::array<Complex, Dim * Dim> random_unitary(std::mt19937_64 &rng) {
  std::normal_distribution<double> normal;
  std::array<Complex, Dim * Dim> m{};
  for (auto &z : m) z = Complex(normal(rng), normal(rng));
  for (std::size_t c = 0; c < Dim; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < Dim; ++r)
        dot += std::conj(m[r * Dim + p]) * m[r * Dim + c];
      for (std::size_t r = 0; r < Dim; ++r) m[r * Dim + c] -= dot * m[r * Dim + p];
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < Dim; ++r) norm += std::norm(m[r * Dim + c]);
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < Dim; ++r) m[r * Dim + c] /= norm;
  }
  return m;
}

/* Random logical circuit: up to max_gates gates over L qubits, mixing random
 * one-qubit unitaries, random neighbour two-qubit unitaries and waits. */
inline LogicalCircuit random_circuit(std::mt19937_64 &rng, std::size_t L,
                                     std::size_t max_gates) {
  LogicalCircuit c{L, {}};
  const std::size_t count = 1 + rng() % max_gates;
  for (std::size_t i = 0; i < count; ++i) {
    const auto kind = rng() % 5;
    if (kind < 2 || L < 2) {
      if (kind == 4)
        c.gates.emplace_back(WaitGate{1 + rng() % 3});
      else
        c.gates.emplace_back(OneQubitGate{1 + rng() % L, random_unitary<2>(rng), ""});
    } else if (kind < 4) {
      c.gates.emplace_back(TwoQubitGate{1 + rng() % (L - 1), random_unitary<4>(rng), ""});
    } else {
      c.gates.emplace_back(WaitGate{1 + rng() % 3});
    }
  }
  return c;
}

// Schmidt rank of a two-qubit pure state (rank of its 2x2 coefficient matrix).
inline int schmidt_rank_2q(const std::vector<Complex> &amps, double tol = 1e-12) {
  const Complex det = amps[0] * amps[3] - amps[1] * amps[2];
  if (std::abs(det) > tol) return 2;
  for (const auto &a : amps)
    if (std::abs(a) > tol) return 1;
  return 0;
}

}  // namespace qspacer::oracle
