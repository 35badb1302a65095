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

// Gate matrices and the two circuit IRs: logical circuits over data qubits
// and physical circuits over grid sites. Qubit and site numbers are
// 1-indexed. Two-qubit matrices act on |x_n x_{n+1}> with x_n the high bit.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qspacer/errors.hpp"

namespace qspacer {

using Complex = std::complex<double>;
using Matrix2 = std::array<Complex, 4>;   // row-major
using Matrix4 = std::array<Complex, 16>;  // row-major

inline constexpr double kUnitarityTolerance = 1e-12;

inline bool is_unitary(std::span<const Complex> matrix, std::size_t dim,
                       double tol = kUnitarityTolerance) {
  if (matrix.size() != dim * dim) return false;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k)
        acc += std::conj(matrix[k * dim + i]) * matrix[k * dim + j];
      if (std::abs(acc - Complex(i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

inline bool is_identity(std::span<const Complex> matrix, std::size_t dim,
                        double tol = kUnitarityTolerance) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (std::abs(matrix[i * dim + j] - Complex(i == j ? 1.0 : 0.0)) > tol)
        return false;
  return true;
}

template <std::size_t N>
std::array<Complex, N> dagger(const std::array<Complex, N> &matrix) {
  constexpr std::size_t dim = N == 4 ? 2 : 4;
  static_assert(N == dim * dim);
  std::array<Complex, N> out{};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      out[j * dim + i] = std::conj(matrix[i * dim + j]);
  return out;
}

namespace gates {

inline Matrix2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }
inline Matrix2 hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s, s, -s};
}
inline Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Matrix2 pauli_y() {
  return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
}
inline Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
inline Matrix2 phase_s() { return {1.0, 0.0, 0.0, Complex(0.0, 1.0)}; }
inline Matrix2 phase_t() {
  return {1.0, 0.0, 0.0, std::polar(1.0, std::acos(-1.0) / 4.0)};
}

inline Matrix4 identity4() {
  Matrix4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i * 4 + i] = 1.0;
  return m;
}
inline Matrix4 cz() {
  Matrix4 m = identity4();
  m[15] = -1.0;
  return m;
}
// Control on the first (lower-numbered) qubit.
inline Matrix4 cnot() {
  Matrix4 m{};
  m[0] = m[5] = 1.0;
  m[2 * 4 + 3] = m[3 * 4 + 2] = 1.0;
  return m;
}
inline Matrix4 swap() {
  Matrix4 m{};
  m[0] = m[15] = 1.0;
  m[1 * 4 + 2] = m[2 * 4 + 1] = 1.0;
  return m;
}

inline std::optional<Matrix2> one_qubit(std::string_view name) {
  if (name == "i" || name == "id") return identity2();
  if (name == "h") return hadamard();
  if (name == "x") return pauli_x();
  if (name == "y") return pauli_y();
  if (name == "z") return pauli_z();
  if (name == "s") return phase_s();
  if (name == "t") return phase_t();
  return std::nullopt;
}

inline std::optional<Matrix4> two_qubit(std::string_view name) {
  if (name == "cz") return cz();
  if (name == "cnot" || name == "cx") return cnot();
  if (name == "swap") return swap();
  return std::nullopt;
}

}  // namespace gates

struct OneQubitGate {
  std::size_t target = 1;
  Matrix2 matrix = gates::identity2();
  std::string name;  // empty when given by matrix

  friend bool operator==(const OneQubitGate &, const OneQubitGate &) = default;
};

// Acts on (target, target + 1).
struct TwoQubitGate {
  std::size_t target = 1;
  Matrix4 matrix = gates::identity4();
  std::string name;

  friend bool operator==(const TwoQubitGate &, const TwoQubitGate &) = default;
};

// Basic swap S_{n,n+1} of adjacent sites.
struct SwapGate {
  std::size_t target = 1;

  friend bool operator==(const SwapGate &, const SwapGate &) = default;
};

struct WaitGate {
  std::size_t steps = 1;

  friend bool operator==(const WaitGate &, const WaitGate &) = default;
};

using LogicalGate = std::variant<OneQubitGate, TwoQubitGate, WaitGate>;
using PhysicalGate = std::variant<OneQubitGate, TwoQubitGate, SwapGate, WaitGate>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

namespace detail {

template <class Gate>
std::size_t gate_steps(const Gate &gate) {
  return std::visit(
      overloaded{[](const WaitGate &w) { return w.steps; },
                 [](const auto &) -> std::size_t { return 1; }},
      gate);
}

}  // namespace detail

struct LogicalCircuit {
  std::size_t qubits = 0;
  std::vector<LogicalGate> gates;

  // Gates plus total wait steps.
  std::size_t step_count() const {
    std::size_t total = 0;
    for (const auto &g : gates) total += detail::gate_steps(g);
    return total;
  }

  void validate() const {
    if (qubits < 1) throw DomainError("circuit needs at least one qubit");
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const std::string where = "gate " + std::to_string(i) + ": ";
      std::visit(
          overloaded{
              [&](const OneQubitGate &g) {
                if (g.target < 1 || g.target > qubits)
                  throw DomainError(where + "qubit " +
                                    std::to_string(g.target) +
                                    " outside register");
                if (!is_unitary(g.matrix, 2))
                  throw DomainError(where + "matrix is not unitary");
              },
              [&](const TwoQubitGate &g) {
                if (g.target < 1 || g.target + 1 > qubits)
                  throw DomainError(where + "qubits (" +
                                    std::to_string(g.target) + "," +
                                    std::to_string(g.target + 1) +
                                    ") outside register");
                if (!is_unitary(g.matrix, 4))
                  throw DomainError(where + "matrix is not unitary");
              },
              [](const WaitGate &) {}},
          gates[i]);
    }
  }

  friend bool operator==(const LogicalCircuit &, const LogicalCircuit &) =
      default;
};

// Where data qubits live in a spacer-encoded register.
struct SpacerEncoding {
  std::size_t m = 1;
  std::size_t logical_qubits = 0;

  friend bool operator==(const SpacerEncoding &, const SpacerEncoding &) =
      default;
};

struct PhysicalCircuit {
  std::size_t qubits = 0;
  std::vector<PhysicalGate> gates;
  std::optional<SpacerEncoding> encoding;

  std::size_t step_count() const {
    std::size_t total = 0;
    for (const auto &g : gates) total += detail::gate_steps(g);
    return total;
  }

  void validate() const {
    if (qubits < 1) throw DomainError("circuit needs at least one site");
    if (encoding && encoding->m * encoding->logical_qubits != qubits)
      throw ShapeError("encoding metadata does not match register size");
    for (std::size_t i = 0; i < gates.size(); ++i) {
      const std::string where = "gate " + std::to_string(i) + ": ";
      auto check_pair = [&](std::size_t target) {
        if (target < 1 || target + 1 > qubits)
          throw DomainError(where + "sites (" + std::to_string(target) + "," +
                            std::to_string(target + 1) +
                            ") outside register");
      };
      std::visit(
          overloaded{
              [&](const OneQubitGate &g) {
                if (g.target < 1 || g.target > qubits)
                  throw DomainError(where + "site " +
                                    std::to_string(g.target) +
                                    " outside register");
                if (!is_unitary(g.matrix, 2))
                  throw DomainError(where + "matrix is not unitary");
              },
              [&](const TwoQubitGate &g) {
                check_pair(g.target);
                if (!is_unitary(g.matrix, 4))
                  throw DomainError(where + "matrix is not unitary");
              },
              [&](const SwapGate &g) { check_pair(g.target); },
              [](const WaitGate &) {}},
          gates[i]);
    }
  }

  friend bool operator==(const PhysicalCircuit &, const PhysicalCircuit &) =
      default;
};

}  // namespace qspacer
