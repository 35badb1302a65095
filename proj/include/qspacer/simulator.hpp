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

// Statevector evolution of physical circuits with the always-on diagonal
// interaction error, a compressed engine that evolves only the data qubits
// of a spacer-encoded register, and the quality factor.
//
// Step model: every basic gate takes one step and every Wait(n) takes n.
// After each step the register picks up exp(-i phi(b)) on basis state b,
// phi as in error_phase. Because that unitary is diagonal, one application
// per step is exact.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qspacer/circuit.hpp"
#include "qspacer/encoder.hpp"
#include "qspacer/errors.hpp"
#include "qspacer/interaction.hpp"
#include "qspacer/state_vector.hpp"

namespace qspacer {

enum class ErrorFrame {
  // Every site pair contributes.
  Lab,
  /* Interaction picture with respect to the spacers: pairs touching a site
   * that currently holds a spacer are dropped. Spacers sit in a known |0>,
   * so those terms are one-qubit phases fixed in advance. Needs encoding
   * metadata to know where the spacers are. */
  Spacer,
};

struct ErrorModel {
  CouplingLaw law;
  RegisterLayout layout;
  // Skip the pair under an active two-qubit gate for that step.
  bool compensate_active_pair = false;
  // Whether basic gate steps accumulate error; waits always do.
  bool noisy_gates = true;
  ErrorFrame frame = ErrorFrame::Lab;
  std::optional<double> cutoff;  // performance knob, off by default
};

struct RunResult {
  StateVector final;
  std::size_t steps_executed = 0;
  // One verdict per step, present for encoded circuits.
  std::vector<bool> spacer_check;

  bool spacers_clear() const {
    for (bool ok : spacer_check)
      if (!ok) return false;
    return true;
  }
};

using SolutionSet = std::vector<BasisState>;

inline constexpr double kSpacerLeakTolerance = 1e-12;

namespace detail {

/* Tracks which data qubit (1-based, 0 for spacer) occupies each site of an
 * encoded register as swaps move them around. */
class SiteTracker {
 public:
  SiteTracker(std::size_t sites, std::size_t m, std::size_t logical)
      : occupant_(sites + 1, 0), position_(logical + 1, 0) {
    for (std::size_t k = 1; k <= logical; ++k) {
      position_[k] = (k - 1) * m + 1;
      occupant_[position_[k]] = k;
    }
  }

  void swap(std::size_t site) {
    std::swap(occupant_[site], occupant_[site + 1]);
    if (occupant_[site]) position_[occupant_[site]] = site;
    if (occupant_[site + 1]) position_[occupant_[site + 1]] = site + 1;
  }

  std::size_t occupant(std::size_t site) const { return occupant_[site]; }
  bool is_spacer(std::size_t site) const { return occupant_[site] == 0; }
  std::size_t position(std::size_t k) const { return position_[k]; }
  std::size_t logical_qubits() const { return position_.size() - 1; }
  std::size_t sites() const { return occupant_.size() - 1; }

 private:
  std::vector<std::size_t> occupant_;
  std::vector<std::size_t> position_;
};

inline std::vector<Complex> phase_factors(const std::vector<double> &phases) {
  std::vector<Complex> out(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i)
    out[i] = std::polar(1.0, -phases[i]);
  return out;
}

template <class Include>
std::vector<double> pair_phase_table(std::size_t n,
                                     const CouplingMatrix &couplings,
                                     Include include) {
  std::vector<double> phases(std::size_t{1} << n, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (!include(i, j)) continue;
      const double c = couplings(i, j);
      if (c == 0.0) continue;
      const std::uint64_t mi = std::uint64_t{1} << (n - i);
      const std::uint64_t mj = std::uint64_t{1} << (n - j);
      for (std::uint64_t idx = 0; idx < phases.size(); ++idx)
        if (((idx & mi) != 0) != ((idx & mj) != 0)) phases[idx] += c;
    }
  }
  return phases;
}

inline void check_model(const ErrorModel &model, std::size_t n) {
  model.law.validate();
  model.layout.validate();
  if (model.layout.n_sites != n)
    throw ShapeError("error model layout has " +
                     std::to_string(model.layout.n_sites) +
                     " sites, register has " + std::to_string(n));
}

inline std::optional<std::size_t> two_qubit_site(const PhysicalGate &g) {
  if (const auto *tq = std::get_if<TwoQubitGate>(&g)) return tq->target;
  return std::nullopt;
}

}  // namespace detail

// One lab-frame error step.
inline StateVector &apply_error_step(StateVector &state,
                                     const ErrorModel &model) {
  detail::check_model(model, state.qubits());
  const CouplingMatrix couplings(model.layout, model.law, model.cutoff);
  const auto phases = detail::pair_phase_table(
      state.qubits(), couplings, [](std::size_t, std::size_t) { return true; });
  state.apply_diagonal(detail::phase_factors(phases));
  return state;
}

inline RunResult run(const PhysicalCircuit &circuit, const ErrorModel &model,
                     const StateVector &initial) {
  circuit.validate();
  const std::size_t n = circuit.qubits;
  StateVector::check_capacity(n);
  detail::check_model(model, n);
  if (initial.qubits() != n)
    throw ShapeError("initial state has " + std::to_string(initial.qubits()) +
                     " qubits, circuit has " + std::to_string(n));

  std::optional<detail::SiteTracker> tracker;
  if (circuit.encoding)
    tracker.emplace(n, circuit.encoding->m, circuit.encoding->logical_qubits);
  if (model.frame == ErrorFrame::Spacer && !tracker)
    throw DomainError("spacer frame needs a circuit with encoding metadata");

  const CouplingMatrix couplings(model.layout, model.law, model.cutoff);
  auto included = [&](std::size_t i, std::size_t j) {
    if (model.frame == ErrorFrame::Lab) return true;
    return !tracker->is_spacer(i) && !tracker->is_spacer(j);
  };

  std::vector<Complex> factors;
  bool stale = true;
  auto refresh = [&] {
    if (!stale) return;
    factors = detail::phase_factors(
        detail::pair_phase_table(n, couplings, included));
    stale = false;
  };

  RunResult result{initial, 0, {}};
  StateVector &state = result.final;

  auto spacer_leak_free = [&] {
    std::uint64_t mask = 0;
    for (std::size_t s = 1; s <= n; ++s)
      if (tracker->is_spacer(s)) mask |= state.site_mask(s);
    double leak = 0.0;
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i)
      if (i & mask) leak += std::norm(amps[i]);
    return leak <= kSpacerLeakTolerance;
  };

  auto error_step = [&](std::optional<std::size_t> active) {
    if (model.law.delta1 == 0.0) return;
    refresh();
    if (active && model.compensate_active_pair && included(*active, *active + 1)) {
      const double c = couplings(*active, *active + 1);
      const std::uint64_t ma = state.site_mask(*active);
      const std::uint64_t mb = state.site_mask(*active + 1);
      auto amps = state.amplitudes();
      const Complex undo = std::polar(1.0, c);
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        amps[i] *= factors[i];
        if (((i & ma) != 0) != ((i & mb) != 0)) amps[i] *= undo;
      }
    } else {
      state.apply_diagonal(factors);
    }
  };

  auto end_step = [&] {
    ++result.steps_executed;
    if (tracker) result.spacer_check.push_back(spacer_leak_free());
  };

  for (const auto &gate : circuit.gates) {
    if (const auto *w = std::get_if<WaitGate>(&gate)) {
      for (std::size_t s = 0; s < w->steps; ++s) {
        error_step(std::nullopt);
        end_step();
      }
      continue;
    }
    apply_gate(state, gate);
    if (const auto *sw = std::get_if<SwapGate>(&gate); sw && tracker) {
      tracker->swap(sw->target);
      if (model.frame == ErrorFrame::Spacer) stale = true;
    }
    if (model.noisy_gates) error_step(detail::two_qubit_site(gate));
    end_step();
  }
  return result;
}

/* Amplitudes of the data qubits with every spacer site in |0>, data qubit k
 * read from site positions[k - 1]. */
inline StateVector restrict_to_data(const StateVector &physical,
                                    const std::vector<std::size_t> &positions) {
  const std::size_t L = positions.size();
  std::vector<Complex> amps(std::size_t{1} << L);
  for (std::uint64_t a = 0; a < amps.size(); ++a) {
    std::uint64_t idx = 0;
    for (std::size_t k = 1; k <= L; ++k)
      if (a & (std::uint64_t{1} << (L - k)))
        idx |= physical.site_mask(positions[k - 1]);
    amps[a] = physical.amplitude(idx);
  }
  StateVector out(L);
  std::copy(amps.begin(), amps.end(), out.amplitudes().begin());
  return out;
}

inline std::vector<std::size_t> home_positions(std::size_t logical,
                                               std::size_t m) {
  std::vector<std::size_t> out(logical);
  for (std::size_t k = 1; k <= logical; ++k) out[k - 1] = (k - 1) * m + 1;
  return out;
}

/* Evolves only the 2^L data amplitudes of a spacer-encoded circuit, tracking
 * where each data qubit sits. Spacers stay |0> under the diagonal model, so
 * per step the phase splits into data-data pair terms at the current
 * distances, one-qubit terms from data-spacer pairs (a data 1 against a
 * spacer 0), and spacer-spacer pairs which never differ. The result equals
 * restrict_to_data(run(...).final) up to global phase. */
inline StateVector run_compressed(const PhysicalCircuit &circuit,
                                  const ErrorModel &model,
                                  const EncodingParams &encoding,
                                  const StateVector &logical_initial) {
  circuit.validate();
  encoding.validate();
  const std::size_t L = logical_initial.qubits();
  const std::size_t m = encoding.m;
  const std::size_t n = circuit.qubits;
  if (n != m * L)
    throw ShapeError("circuit has " + std::to_string(n) +
                     " sites, expected m L = " + std::to_string(m * L));
  if (circuit.encoding && !(*circuit.encoding == SpacerEncoding{m, L}))
    throw ShapeError("circuit encoding metadata disagrees with parameters");
  detail::check_model(model, n);

  detail::SiteTracker tracker(n, m, L);
  const CouplingMatrix couplings(model.layout, model.law, model.cutoff);
  const bool lab = model.frame == ErrorFrame::Lab;

  StateVector state = logical_initial;
  const std::uint64_t dim = state.dimension();
  auto bit = [&](std::uint64_t a, std::size_t k) {
    return (a >> (L - k)) & 1U;
  };

  std::vector<Complex> factors;
  bool stale = true;
  auto refresh = [&] {
    if (!stale) return;
    std::vector<double> local(L + 1, 0.0);
    if (lab) {
      for (std::size_t k = 1; k <= L; ++k)
        for (std::size_t s = 1; s <= n; ++s)
          if (tracker.is_spacer(s)) local[k] += couplings(tracker.position(k), s);
    }
    std::vector<double> phases(dim, 0.0);
    for (std::uint64_t a = 0; a < dim; ++a) {
      double phi = 0.0;
      for (std::size_t k = 1; k <= L; ++k) {
        if (bit(a, k)) phi += local[k];
        for (std::size_t l = k + 1; l <= L; ++l)
          if (bit(a, k) != bit(a, l))
            phi += couplings(tracker.position(k), tracker.position(l));
      }
      phases[a] = phi;
    }
    factors = detail::phase_factors(phases);
    stale = false;
  };

  auto error_step = [&](std::optional<std::size_t> active) {
    if (model.law.delta1 == 0.0) return;
    refresh();
    state.apply_diagonal(factors);
    if (!active || !model.compensate_active_pair) return;
    const std::size_t k = tracker.occupant(*active);
    const std::size_t l = tracker.occupant(*active + 1);
    if (!k && !l) return;
    if ((!k || !l) && !lab) return;
    const Complex undo = std::polar(1.0, couplings(*active, *active + 1));
    auto amps = state.amplitudes();
    for (std::uint64_t a = 0; a < dim; ++a) {
      const bool differs = (k && l) ? bit(a, k) != bit(a, l)
                                    : bit(a, k ? k : l) != 0;
      if (differs) amps[a] *= undo;
    }
  };

  for (const auto &gate : circuit.gates) {
    std::optional<std::size_t> active;
    bool noisy = model.noisy_gates;
    std::visit(
        overloaded{
            [&](const OneQubitGate &g) {
              const std::size_t k = tracker.occupant(g.target);
              if (k) {
                state.apply_one(k, g.matrix);
              } else if (!is_identity(g.matrix, 2)) {
                throw UnsupportedGateError("gate acts on spacer site " +
                                           std::to_string(g.target));
              }
            },
            [&](const TwoQubitGate &g) {
              const std::size_t k = tracker.occupant(g.target);
              const std::size_t l = tracker.occupant(g.target + 1);
              if (k && l) {
                state.apply_two(k, l, g.matrix);
              } else if (!is_identity(g.matrix, 4)) {
                throw UnsupportedGateError(
                    "two-qubit gate touches spacer site at (" +
                    std::to_string(g.target) + "," +
                    std::to_string(g.target + 1) + ")");
              }
              active = g.target;
            },
            [&](const SwapGate &g) {
              tracker.swap(g.target);
              stale = true;
            },
            [&](const WaitGate &g) {
              noisy = false;
              for (std::size_t s = 0; s < g.steps; ++s)
                error_step(std::nullopt);
            }},
        gate);
    if (noisy) error_step(active);
  }
  return state;
}

/* Probability that measuring every qubit lands in the solution set.
 * Duplicate members count once. */
inline double quality(const StateVector &state, const SolutionSet &solutions) {
  if (solutions.empty()) throw DomainError("solution set is empty");
  std::set<std::uint64_t> members;
  for (const auto &s : solutions) {
    if (s.size() != state.qubits())
      throw ShapeError("solution " + s.to_string() + " has " +
                       std::to_string(s.size()) + " bits, register has " +
                       std::to_string(state.qubits()));
    members.insert(s.index());
  }
  double q = 0.0;
  for (auto idx : members) q += std::norm(state.amplitude(idx));
  return q;
}

}  // namespace qspacer
