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

// Circuit documents and report output.
//
// Circuit JSON:
//   {"qubits": L,
//    "encoding": {"m": m, "logical_qubits": L}      (compiled circuits only)
//    "gates": [{"op": "1q", "target": k, "name": "h"},
//              {"op": "2q", "target": [k, k+1], "name": "cnot"},
//              {"op": "2q", "target": [k, k+1], "matrix": [[re, im], ...]},
//              {"op": "swap", "target": [n, n+1]},
//              {"op": "wait", "steps": n}]}
// "matrix" is row-major and takes precedence over "name".

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <type_traits>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qspacer/analysis.hpp"
#include "qspacer/circuit.hpp"
#include "qspacer/errors.hpp"
#include "qspacer/interaction.hpp"

namespace qspacer::io {

using nlohmann::json;

namespace detail {

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos)
      what = what.substr(pos);
    throw ParseError(what, line, column);
  }
}

inline std::string where(std::size_t index) {
  return "gate " + std::to_string(index) + ": ";
}

inline std::size_t get_count(const json &obj, const char *key,
                             const std::string &context) {
  if (!obj.contains(key))
    throw ParseError(context + "missing \"" + key + "\"");
  const auto &v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(context + "\"" + key +
                     "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

template <std::size_t N>
std::array<Complex, N> read_matrix(const json &m, const std::string &context) {
  if (!m.is_array() || m.size() != N)
    throw ParseError(context + "matrix needs " + std::to_string(N) +
                     " [re, im] entries");
  std::array<Complex, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    const auto &e = m[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw ParseError(context + "matrix entry " + std::to_string(i) +
                       " must be [re, im]");
    out[i] = Complex(e[0].get<double>(), e[1].get<double>());
  }
  if (!is_unitary(out, N == 4 ? 2 : 4))
    throw ParseError(context + "matrix is not unitary");
  return out;
}

template <std::size_t N>
json write_matrix(const std::array<Complex, N> &m) {
  json out = json::array();
  for (const auto &z : m) out.push_back({z.real(), z.imag()});
  return out;
}

inline std::size_t single_target(const json &g, const std::string &context) {
  if (!g.contains("target"))
    throw ParseError(context + "missing \"target\"");
  const json &raw = g.at("target");
  const json &t = raw.is_array() && raw.size() == 1 ? raw[0] : raw;
  if (!t.is_number_integer() || t.get<long long>() < 1)
    throw ParseError(context + "\"target\" must be a positive integer");
  return t.get<std::size_t>();
}

// [k, k+1] or a bare k; anything else is not an adjacent pair.
inline std::size_t pair_target(const json &g, const std::string &context) {
  if (!g.contains("target"))
    throw ParseError(context + "missing \"target\"");
  const auto &t = g.at("target");
  if (t.is_number_integer()) return single_target(g, context);
  if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
      !t[1].is_number_integer() || t[0].get<long long>() < 1)
    throw ParseError(context + "\"target\" must be [k, k+1]");
  const auto a = t[0].get<long long>();
  const auto b = t[1].get<long long>();
  if (b != a + 1)
    throw UnsupportedGateError(context + "two-qubit gate on (" +
                               std::to_string(a) + "," + std::to_string(b) +
                               ") is not an adjacent pair");
  return static_cast<std::size_t>(a);
}

inline OneQubitGate read_one(const json &g, const std::string &context) {
  OneQubitGate out;
  out.target = single_target(g, context);
  if (g.contains("name")) out.name = g.at("name").get<std::string>();
  if (g.contains("matrix")) {
    out.matrix = read_matrix<4>(g.at("matrix"), context);
  } else if (auto m = gates::one_qubit(out.name)) {
    out.matrix = *m;
  } else {
    throw UnsupportedGateError(context + "unknown one-qubit gate '" +
                               out.name + "'");
  }
  return out;
}

inline TwoQubitGate read_two(const json &g, const std::string &context) {
  TwoQubitGate out;
  out.target = pair_target(g, context);
  if (g.contains("name")) out.name = g.at("name").get<std::string>();
  if (g.contains("matrix")) {
    out.matrix = read_matrix<16>(g.at("matrix"), context);
  } else if (auto m = gates::two_qubit(out.name)) {
    out.matrix = *m;
  } else {
    throw UnsupportedGateError(context + "unknown two-qubit gate '" +
                               out.name + "'");
  }
  return out;
}

template <class Gate>
void write_matrix_or_name(json &out, const Gate &g) {
  bool named = false;
  if (!g.name.empty()) {
    out["name"] = g.name;
    if constexpr (std::is_same_v<Gate, OneQubitGate>) {
      auto m = gates::one_qubit(g.name);
      named = m && *m == g.matrix;
    } else {
      auto m = gates::two_qubit(g.name);
      named = m && *m == g.matrix;
    }
  }
  if (!named) out["matrix"] = write_matrix(g.matrix);
}

inline json pair_json(std::size_t target) {
  return json::array({target, target + 1});
}

struct RawCircuit {
  std::size_t qubits = 0;
  std::vector<json> gates;
  std::optional<SpacerEncoding> encoding;
};

inline RawCircuit read_raw(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("circuit document must be an object");
  RawCircuit out;
  out.qubits = get_count(doc, "qubits", "");
  if (doc.contains("encoding")) {
    const auto &e = doc.at("encoding");
    out.encoding = SpacerEncoding{get_count(e, "m", "encoding: "),
                                  get_count(e, "logical_qubits", "encoding: ")};
  }
  if (!doc.contains("gates") || !doc.at("gates").is_array())
    throw ParseError("missing \"gates\" array");
  for (const auto &g : doc.at("gates")) out.gates.push_back(g);
  return out;
}

inline std::string op_of(const json &g, const std::string &context) {
  if (!g.is_object() || !g.contains("op") || !g.at("op").is_string())
    throw ParseError(context + "missing \"op\"");
  return g.at("op").get<std::string>();
}

}  // namespace detail

inline bool is_compiled_document(std::string_view text) {
  const json doc = detail::parse_json(text);
  return doc.is_object() && doc.contains("encoding");
}

/* Logical circuits have no "swap" gate of their own; a logical swap is the
 * two-qubit SWAP unitary. */
inline LogicalCircuit parse_logical_circuit(std::string_view text) {
  const auto raw = detail::read_raw(text);
  LogicalCircuit out{raw.qubits, {}};
  for (std::size_t i = 0; i < raw.gates.size(); ++i) {
    const auto &g = raw.gates[i];
    const std::string ctx = detail::where(i);
    const std::string op = detail::op_of(g, ctx);
    if (op == "1q") {
      out.gates.emplace_back(detail::read_one(g, ctx));
    } else if (op == "2q") {
      out.gates.emplace_back(detail::read_two(g, ctx));
    } else if (op == "swap") {
      out.gates.emplace_back(TwoQubitGate{detail::pair_target(g, ctx),
                                          gates::swap(), "swap"});
    } else if (op == "wait") {
      out.gates.emplace_back(WaitGate{detail::get_count(g, "steps", ctx)});
    } else {
      throw UnsupportedGateError(ctx + "unknown op '" + op + "'");
    }
  }
  try {
    out.validate();
  } catch (const DomainError &e) {
    throw UnsupportedGateError(e.what());
  }
  return out;
}

inline PhysicalCircuit parse_physical_circuit(std::string_view text) {
  const auto raw = detail::read_raw(text);
  PhysicalCircuit out{raw.qubits, {}, raw.encoding};
  for (std::size_t i = 0; i < raw.gates.size(); ++i) {
    const auto &g = raw.gates[i];
    const std::string ctx = detail::where(i);
    const std::string op = detail::op_of(g, ctx);
    if (op == "1q") {
      out.gates.emplace_back(detail::read_one(g, ctx));
    } else if (op == "2q") {
      out.gates.emplace_back(detail::read_two(g, ctx));
    } else if (op == "swap") {
      out.gates.emplace_back(SwapGate{detail::pair_target(g, ctx)});
    } else if (op == "wait") {
      out.gates.emplace_back(WaitGate{detail::get_count(g, "steps", ctx)});
    } else {
      throw UnsupportedGateError(ctx + "unknown op '" + op + "'");
    }
  }
  try {
    out.validate();
  } catch (const DomainError &e) {
    throw UnsupportedGateError(e.what());
  }
  return out;
}

template <class Gate>
json gate_to_json(const Gate &gate) {
  return std::visit(
      overloaded{
          [](const OneQubitGate &g) {
            json out{{"op", "1q"}, {"target", g.target}};
            detail::write_matrix_or_name(out, g);
            return out;
          },
          [](const TwoQubitGate &g) {
            json out{{"op", "2q"}, {"target", detail::pair_json(g.target)}};
            detail::write_matrix_or_name(out, g);
            return out;
          },
          [](const SwapGate &g) {
            return json{{"op", "swap"}, {"target", detail::pair_json(g.target)}};
          },
          [](const WaitGate &g) { return json{{"op", "wait"}, {"steps", g.steps}}; }},
      gate);
}

inline json to_json(const LogicalCircuit &c) {
  json gates = json::array();
  for (const auto &g : c.gates) gates.push_back(gate_to_json(g));
  return json{{"qubits", c.qubits}, {"gates", gates}};
}

inline json to_json(const PhysicalCircuit &c) {
  json gates = json::array();
  for (const auto &g : c.gates) gates.push_back(gate_to_json(g));
  json out{{"qubits", c.qubits}};
  if (c.encoding)
    out["encoding"] = {{"m", c.encoding->m},
                       {"logical_qubits", c.encoding->logical_qubits}};
  out["gates"] = gates;
  return out;
}

inline json to_json(const ResourceReport &r) {
  return json{{"L_prime", r.L_prime},
              {"P_prime", r.P_prime},
              {"P_prime_bound", r.P_prime_bound},
              {"delta_prime_bound", r.delta_prime_bound}};
}

inline json to_json(const ScalingFit &f) {
  return json{{"exponent", f.exponent},
              {"prefactor", f.prefactor},
              {"residual", f.residual}};
}

// One bitstring per line; blank lines and '#' comments are skipped.
inline SolutionSet parse_solutions(std::string_view text) {
  SolutionSet out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    try {
      out.push_back(BasisState::from_string(token));
    } catch (const DomainError &e) {
      throw ParseError(e.what(), number, first + 1);
    }
  }
  return out;
}

// Fixed scientific notation, 12 significant digits.
inline std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return buf;
}

inline std::string to_csv(const QualityCurve &curve) {
  std::string out = "m,L,P,delta,Q,sigma_est\n";
  for (const auto &r : curve) {
    out += std::to_string(r.m) + "," + std::to_string(r.L) + "," +
           std::to_string(r.P) + "," + format_number(r.delta) + "," +
           format_number(r.Q) + "," + format_number(r.sigma_est) + "\n";
  }
  return out;
}

inline json to_json(const QualityCurve &curve) {
  json rows = json::array();
  for (const auto &r : curve) {
    json sigma = std::isfinite(r.sigma_est) ? json(r.sigma_est) : json(nullptr);
    rows.push_back({{"m", r.m},
                    {"L", r.L},
                    {"P", r.P},
                    {"delta", r.delta},
                    {"Q", r.Q},
                    {"sigma_est", sigma}});
  }
  return rows;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace qspacer::io
