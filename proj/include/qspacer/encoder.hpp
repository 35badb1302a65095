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

// Spacer encoding pass. Logical qubit k (1-indexed) lives at physical site
// (k - 1) m + 1 followed by m - 1 spacer sites held in |0>. One-qubit gates
// move with the index shift; a neighbour two-qubit gate walks the left data
// qubit across its spacers, applies the gate on adjacent sites and walks it
// back, 2m - 1 basic gates in total.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qspacer/circuit.hpp"
#include "qspacer/errors.hpp"
#include "qspacer/interaction.hpp"

namespace qspacer {

struct EncodingParams {
  std::size_t m = 1;
  bool dual_rail = false;

  void validate() const {
    if (m < 1) throw DomainError("spacer multiplicity m must be >= 1");
  }
};

struct ResourceReport {
  std::size_t L_prime = 0;          // physical qubits, m L
  std::size_t P_prime = 0;          // physical steps of the compiled circuit
  std::size_t P_prime_bound = 0;    // (2m - 1) P
  double delta_prime_bound = 0.0;   // delta / m^3

  friend bool operator==(const ResourceReport &, const ResourceReport &) =
      default;
};

inline BasisState encode_basis(const BasisState &logical, std::size_t m) {
  EncodingParams{m}.validate();
  BasisState out;
  out.bits.assign(logical.size() * m, 0);
  for (std::size_t k = 0; k < logical.size(); ++k)
    out.bits[k * m] = logical.bits[k];
  return out;
}

inline std::size_t data_position(std::size_t k, std::size_t m,
                                 std::size_t logical_qubits) {
  EncodingParams{m}.validate();
  if (k < 1 || k > logical_qubits)
    throw DomainError("logical qubit " + std::to_string(k) +
                      " outside register of " +
                      std::to_string(logical_qubits));
  return (k - 1) * m + 1;
}

// Reads the data sites back out of an encoded bitstring.
inline BasisState decode_basis(const BasisState &physical, std::size_t m) {
  EncodingParams{m}.validate();
  if (physical.size() % m != 0)
    throw ShapeError("encoded length " + std::to_string(physical.size()) +
                     " is not a multiple of m = " + std::to_string(m));
  BasisState out;
  for (std::size_t s = 0; s < physical.size(); s += m)
    out.bits.push_back(physical.bits[s]);
  return out;
}

/* Swaps carrying the data qubit of logical k from (k - 1) m + 1 to k m,
 * in application order. */
inline std::vector<SwapGate> swap_chain(std::size_t k, std::size_t m) {
  EncodingParams{m}.validate();
  if (k < 1) throw DomainError("logical qubit index must be >= 1");
  std::vector<SwapGate> chain;
  chain.reserve(m - 1);
  const std::size_t home = (k - 1) * m + 1;
  for (std::size_t n = home; n < k * m; ++n) chain.push_back(SwapGate{n});
  return chain;
}

/* The returned chain is undone in reverse order after the gate, so every
 * data qubit is back home and every spacer back on a spacer site. */
inline std::vector<PhysicalGate> compile_two_qubit(const TwoQubitGate &gate,
                                                   std::size_t m,
                                                   std::size_t logical_qubits) {
  EncodingParams{m}.validate();
  if (gate.target < 1 || gate.target + 1 > logical_qubits)
    throw UnsupportedGateError(
        "two-qubit gate on (" + std::to_string(gate.target) + "," +
        std::to_string(gate.target + 1) + ") is not a neighbour pair of a " +
        std::to_string(logical_qubits) + "-qubit register");
  const auto chain = swap_chain(gate.target, m);
  std::vector<PhysicalGate> out;
  out.reserve(2 * m - 1);
  for (const auto &s : chain) out.emplace_back(s);
  out.emplace_back(TwoQubitGate{gate.target * m, gate.matrix, gate.name});
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    out.emplace_back(*it);
  return out;
}

inline std::pair<PhysicalCircuit, ResourceReport> compile_circuit(
    const LogicalCircuit &circuit, const EncodingParams &params,
    double delta = 1.0) {
  params.validate();
  circuit.validate();
  const std::size_t m = params.m;
  const std::size_t L = circuit.qubits;

  PhysicalCircuit out;
  if (params.dual_rail) {
    // Only idle evolution is defined on dual-rail registers.
    if (m != 1)
      throw UnsupportedGateError("dual-rail encoding does not combine with m > 1");
    for (const auto &g : circuit.gates)
      if (!std::holds_alternative<WaitGate>(g))
        throw UnsupportedGateError(
            "dual-rail registers support idle (wait) circuits only");
    out.qubits = 2 * L;
  } else {
    out.qubits = m * L;
    out.encoding = SpacerEncoding{m, L};
  }

  for (const auto &gate : circuit.gates) {
    std::visit(
        overloaded{
            [&](const OneQubitGate &g) {
              out.gates.emplace_back(OneQubitGate{
                  data_position(g.target, m, L), g.matrix, g.name});
            },
            [&](const TwoQubitGate &g) {
              for (auto &pg : compile_two_qubit(g, m, L))
                out.gates.push_back(std::move(pg));
            },
            [&](const WaitGate &g) { out.gates.emplace_back(g); }},
        gate);
  }

  ResourceReport report;
  report.L_prime = out.qubits;
  report.P_prime = out.step_count();
  report.P_prime_bound = (2 * m - 1) * circuit.step_count();
  const double md = static_cast<double>(m);
  report.delta_prime_bound = delta / (md * md * md);
  return {std::move(out), report};
}

// 0 -> 01, 1 -> 10 on consecutive site pairs.
inline BasisState dual_rail_encode(const BasisState &logical) {
  BasisState out;
  out.bits.reserve(2 * logical.size());
  for (auto bit : logical.bits) {
    out.bits.push_back(bit ? 1 : 0);
    out.bits.push_back(bit ? 0 : 1);
  }
  return out;
}

// True iff every non-data site of a home-position encoding holds 0.
inline bool check_spacer_sites(const BasisState &physical, std::size_t m,
                               std::size_t logical_qubits) {
  EncodingParams{m}.validate();
  if (physical.size() != m * logical_qubits)
    throw ShapeError("bitstring has " + std::to_string(physical.size()) +
                     " sites, expected m L = " +
                     std::to_string(m * logical_qubits));
  for (std::size_t s = 0; s < physical.size(); ++s)
    if (s % m != 0 && physical.bits[s] != 0) return false;
  return true;
}

}  // namespace qspacer
