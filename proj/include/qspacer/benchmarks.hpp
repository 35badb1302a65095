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

// Logical benchmark circuits for quality sweeps.
//
//   sandwich: H on every qubit, Wait(P), H on every qubit. Ideal outcome is
//             all zeros; only the P idle steps are meant to be noisy.
//   mirror:   a seeded random circuit of neighbour gates followed by its
//             inverse, P logical steps in total. Ideal outcome all zeros.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qspacer/circuit.hpp"
#include "qspacer/errors.hpp"
#include "qspacer/interaction.hpp"

namespace qspacer {

enum class Benchmark { Sandwich, Mirror };

inline std::string to_string(Benchmark b) {
  return b == Benchmark::Sandwich ? "sandwich" : "mirror";
}

inline Benchmark parse_benchmark(const std::string &name) {
  if (name == "sandwich") return Benchmark::Sandwich;
  if (name == "mirror") return Benchmark::Mirror;
  throw DomainError("unknown benchmark '" + name + "'");
}

inline LogicalCircuit sandwich_circuit(std::size_t L, std::size_t P) {
  LogicalCircuit c{L, {}};
  for (std::size_t k = 1; k <= L; ++k)
    c.gates.emplace_back(OneQubitGate{k, gates::hadamard(), "h"});
  if (P > 0) c.gates.emplace_back(WaitGate{P});
  for (std::size_t k = 1; k <= L; ++k)
    c.gates.emplace_back(OneQubitGate{k, gates::hadamard(), "h"});
  return c;
}

inline BasisState all_zeros(std::size_t L) {
  BasisState s;
  s.bits.assign(L, 0);
  return s;
}

namespace detail {

inline bool self_inverse(const std::string &name) {
  return name == "h" || name == "x" || name == "y" || name == "z" ||
         name == "cz" || name == "cnot" || name == "swap";
}

template <class Gate>
Gate inverse_of(const Gate &g) {
  Gate out = g;
  out.matrix = dagger(g.matrix);
  if (!self_inverse(g.name)) out.name.clear();
  return out;
}

}  // namespace detail

/* Random neighbour circuit followed by its inverse. Odd P gets one extra
 * Wait step in the middle so the step count is exactly P. */
inline LogicalCircuit mirror_circuit(std::size_t L, std::size_t P,
                                     std::uint64_t seed) {
  if (L < 1) throw DomainError("benchmark needs at least one qubit");
  std::mt19937_64 rng(seed);
  static const char *const kOne[] = {"h", "x", "y", "z", "s", "t"};
  static const char *const kTwo[] = {"cz", "cnot"};
  std::vector<LogicalGate> forward;
  for (std::size_t i = 0; i < P / 2; ++i) {
    const bool two = L >= 2 && (rng() % 2 == 0);
    if (two) {
      const std::size_t k = 1 + rng() % (L - 1);
      const std::string name = kTwo[rng() % 2];
      forward.emplace_back(TwoQubitGate{k, *gates::two_qubit(name), name});
    } else {
      const std::size_t k = 1 + rng() % L;
      const std::string name = kOne[rng() % 6];
      forward.emplace_back(OneQubitGate{k, *gates::one_qubit(name), name});
    }
  }
  LogicalCircuit c{L, forward};
  if (P % 2 == 1) c.gates.emplace_back(WaitGate{1});
  for (auto it = forward.rbegin(); it != forward.rend(); ++it)
    c.gates.push_back(
        std::visit([](const auto &g) -> LogicalGate {
          if constexpr (std::is_same_v<std::decay_t<decltype(g)>, WaitGate>)
            return g;
          else
            return detail::inverse_of(g);
        },
                   *it));
  return c;
}

}  // namespace qspacer
