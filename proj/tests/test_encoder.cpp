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

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "qspacer/encoder.hpp"
#include "support/oracles.hpp"

using namespace qspacer;

namespace {

BasisState bits(const char *s) { return BasisState::from_string(s); }

// Applies a gate list to site labels; only swaps move labels.
std::vector<int> track_labels(std::vector<int> labels,
                              const std::vector<PhysicalGate> &gates) {
  for (const auto &g : gates)
    if (const auto *s = std::get_if<SwapGate>(&g))
      std::swap(labels[s->target - 1], labels[s->target]);
  return labels;
}

std::vector<PhysicalGate> as_physical(const std::vector<SwapGate> &chain) {
  return {chain.begin(), chain.end()};
}

}  // namespace

TEST_CASE("encode_basis appends m-1 spacers", "[encoder]") {
  CHECK(encode_basis(bits("1"), 3) == bits("100"));
  CHECK(encode_basis(bits("11"), 2) == bits("1010"));
  CHECK(encode_basis(bits("0110"), 1) == bits("0110"));
  CHECK_THROWS_AS(encode_basis(bits("1"), 0), DomainError);

  SECTION("round trip through the data sites") {
    for (std::size_t L = 1; L <= 8; ++L)
      for (std::size_t m = 1; m <= 5; ++m)
        for (std::uint64_t idx = 0; idx < (1ULL << L); ++idx) {
          const auto logical = BasisState::from_index(idx, L);
          const auto enc = encode_basis(logical, m);
          REQUIRE(enc.size() == m * L);
          CHECK(decode_basis(enc, m) == logical);
          CHECK(check_spacer_sites(enc, m, L));
        }
  }
}

TEST_CASE("data_position shifts indices", "[encoder]") {
  for (std::size_t m = 1; m <= 5; ++m) CHECK(data_position(1, m, 4) == 1);
  CHECK(data_position(2, 3, 4) == 4);
  CHECK(data_position(5, 2, 5) == 9);
  CHECK_THROWS_AS(data_position(0, 2, 3), DomainError);
  CHECK_THROWS_AS(data_position(4, 2, 3), DomainError);
}

TEST_CASE("swap_chain walks the data qubit to k m", "[encoder]") {
  CHECK(swap_chain(1, 1).empty());
  CHECK(swap_chain(1, 3) == std::vector<SwapGate>{{1}, {2}});
  CHECK(swap_chain(2, 2) == std::vector<SwapGate>{{3}});
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<int> labels(3 * m);
      std::iota(labels.begin(), labels.end(), 1);
      const auto moved = track_labels(labels, as_physical(swap_chain(k, m)));
      const int data = static_cast<int>((k - 1) * m + 1);
      CHECK(moved[k * m - 1] == data);
    }
}

TEST_CASE("compile_two_qubit uses 2m-1 basic gates", "[encoder]") {
  const TwoQubitGate cz{1, gates::cz(), "cz"};
  SECTION("m = 1") {
    const auto out = compile_two_qubit(cz, 1, 2);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == PhysicalGate{TwoQubitGate{1, gates::cz(), "cz"}});
  }
  SECTION("m = 2") {
    const auto out = compile_two_qubit(cz, 2, 2);
    const std::vector<PhysicalGate> expected{
        SwapGate{1}, TwoQubitGate{2, gates::cz(), "cz"}, SwapGate{1}};
    CHECK(out == expected);
  }
  SECTION("m = 3") {
    const auto out = compile_two_qubit(cz, 3, 2);
    const std::vector<PhysicalGate> expected{
        SwapGate{1}, SwapGate{2}, TwoQubitGate{3, gates::cz(), "cz"},
        SwapGate{2}, SwapGate{1}};
    CHECK(out == expected);
  }
  SECTION("count and adjacency for m up to 16") {
    for (std::size_t m = 1; m <= 16; ++m)
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto out = compile_two_qubit({k, gates::cnot(), "cnot"}, m, 4);
        CHECK(out.size() == 2 * m - 1);
        std::size_t two = 0;
        for (const auto &g : out)
          if (const auto *t = std::get_if<TwoQubitGate>(&g)) {
            ++two;
            CHECK(t->target == k * m);
          }
        CHECK(two == 1);
        // Every label returns to its own site afterwards.
        std::vector<int> labels(4 * m);
        std::iota(labels.begin(), labels.end(), 1);
        CHECK(track_labels(labels, out) == labels);
      }
  }
  SECTION("the same chain on both sides would not restore positions") {
    const auto chain = as_physical(swap_chain(1, 3));
    std::vector<PhysicalGate> literal = chain;
    literal.insert(literal.end(), chain.begin(), chain.end());
    std::vector<int> labels{1, 2, 3, 4, 5, 6};
    CHECK(track_labels(labels, literal)[0] != 1);
  }
  SECTION("non-neighbour pairs are rejected") {
    CHECK_THROWS_AS(compile_two_qubit({3, gates::cz(), "cz"}, 2, 3),
                    UnsupportedGateError);
    CHECK_THROWS_AS(compile_two_qubit({0, gates::cz(), "cz"}, 2, 3),
                    UnsupportedGateError);
  }
}

TEST_CASE("compile_circuit remaps and accounts resources", "[encoder]") {
  SECTION("m = 1 is the identity encoding") {
    LogicalCircuit c{3,
                     {OneQubitGate{2, gates::hadamard(), "h"},
                      TwoQubitGate{1, gates::cz(), "cz"}, WaitGate{4}}};
    const auto [phys, report] = compile_circuit(c, {1});
    CHECK(phys.qubits == 3);
    CHECK(phys.gates.size() == c.gates.size());
    CHECK(std::get<OneQubitGate>(phys.gates[0]).target == 2);
    CHECK(std::get<TwoQubitGate>(phys.gates[1]).target == 1);
    CHECK(report.L_prime == 3);
    CHECK(report.P_prime == c.step_count());
  }
  SECTION("one two-qubit gate at m = 4") {
    LogicalCircuit c{2, {TwoQubitGate{1, gates::cz(), "cz"}}};
    CHECK(compile_circuit(c, {4}).second.P_prime == 7);
  }
  SECTION("hand-assembled L = 3, m = 2 example") {
    LogicalCircuit c{3,
                     {OneQubitGate{2, gates::pauli_x(), "x"},
                      TwoQubitGate{1, gates::cnot(), "cnot"}}};
    const auto [phys, report] = compile_circuit(c, {2}, 0.08);
    const std::vector<PhysicalGate> expected{
        OneQubitGate{3, gates::pauli_x(), "x"}, SwapGate{1},
        TwoQubitGate{2, gates::cnot(), "cnot"}, SwapGate{1}};
    CHECK(phys.gates == expected);
    CHECK(phys.qubits == 6);
    CHECK(phys.encoding == SpacerEncoding{2, 3});
    CHECK(report.L_prime == 6);
    CHECK(report.P_prime == 4);
    CHECK(report.P_prime_bound == 6);
    CHECK(report.delta_prime_bound == Catch::Approx(0.01).epsilon(1e-15));
  }
  SECTION("P' <= (2m-1)P, equality iff only two-qubit gates") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t L = 2 + rng() % 4;
      const auto c = oracle::random_circuit(rng, L, 12);
      bool only_two = true;
      for (const auto &g : c.gates)
        only_two &= std::holds_alternative<TwoQubitGate>(g);
      for (std::size_t m = 1; m <= 16; ++m) {
        const auto report = compile_circuit(c, {m}).second;
        CHECK(report.L_prime == m * L);
        CHECK(report.P_prime <= report.P_prime_bound);
        if (m > 1) CHECK((report.P_prime == report.P_prime_bound) == only_two);
      }
    }
  }
  SECTION("dual-rail registers accept idle circuits only") {
    LogicalCircuit idle{2, {WaitGate{3}}};
    const auto out = compile_circuit(idle, {1, true}).first;
    CHECK(out.qubits == 4);
    CHECK_FALSE(out.encoding.has_value());
    LogicalCircuit busy{2, {OneQubitGate{1, gates::pauli_x(), "x"}}};
    CHECK_THROWS_AS(compile_circuit(busy, {1, true}), UnsupportedGateError);
  }
}

TEST_CASE("dual_rail_encode pairs each qubit with its complement",
          "[encoder][dualrail]") {
  CHECK(dual_rail_encode(bits("0")) == bits("01"));
  CHECK(dual_rail_encode(bits("1")) == bits("10"));
  CHECK(dual_rail_encode(bits("10")) == bits("1001"));
  for (std::size_t L = 1; L <= 8; ++L)
    for (std::uint64_t idx = 0; idx < (1ULL << L); ++idx) {
      const auto out = dual_rail_encode(BasisState::from_index(idx, L));
      std::size_t weight = 0;
      for (std::size_t p = 0; p < L; ++p) {
        CHECK(out.bits[2 * p] + out.bits[2 * p + 1] == 1);
        weight += out.bits[2 * p] + out.bits[2 * p + 1];
      }
      CHECK(weight == L);
    }
}

TEST_CASE("check_spacer_sites", "[encoder]") {
  CHECK(check_spacer_sites(encode_basis(bits("11"), 2), 2, 2));
  CHECK_FALSE(check_spacer_sites(bits("1100"), 2, 2));
  CHECK(check_spacer_sites(bits("1111"), 1, 4));
  CHECK_THROWS_AS(check_spacer_sites(bits("110"), 2, 2), ShapeError);
}
