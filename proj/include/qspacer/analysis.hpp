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

// Dispersion and quality relations, resource estimates, parameter sweeps
// over (m, L, P, delta) and log-log exponent fits.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qspacer/benchmarks.hpp"
#include "qspacer/encoder.hpp"
#include "qspacer/errors.hpp"
#include "qspacer/simulator.hpp"

namespace qspacer {

/* Inverts Q = exp(-sigma^2). Values within 1e-12 above 1 are rounding noise
 * from the simulator and read as Q = 1. */
inline double sigma_from_quality(double q) {
  if (!(q > 0.0) || q > 1.0 + 1e-12 || !std::isfinite(q))
    throw DomainError("quality must lie in (0, 1], got " + std::to_string(q));
  return std::sqrt(std::max(0.0, -std::log(std::min(q, 1.0))));
}

struct PredictionParams {
  double C = 1.0;
  double P = 0.0;
  double L = 1.0;
  double delta = 0.0;

  void validate() const {
    if (!(C > 0.0)) throw DomainError("C must be positive");
    if (!(P >= 0.0)) throw DomainError("P must be >= 0");
    if (!(L >= 1.0)) throw DomainError("L must be >= 1");
    if (!(delta >= 0.0)) throw DomainError("delta must be >= 0");
  }
};

// sigma = C P sqrt(L) delta
inline double predicted_sigma(const PredictionParams &p) {
  p.validate();
  return p.C * p.P * std::sqrt(p.L) * p.delta;
}

/* Register size beyond which one step already degrades the register,
 * 1 / delta^2. Evaluated as (1/delta)^2, which is exact for delta = 10^-k
 * at small k. */
inline double critical_register_size(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw DomainError("delta must be positive");
  const double inv = 1.0 / delta;
  return inv * inv;
}

struct ResourceEstimate {
  ResourceReport report;      // P_prime holds the two-qubit-only worst case
  double P_sqrt_L = 0.0;
  double sigma = 0.0;         // predicted_sigma with C = 1
  double sigma_prime_bound = 0.0;
  double delta_ratio_bound = 0.0;  // m^-3
  double sigma_ratio_bound = 0.0;  // m^-3/2
  double critical_L = 0.0;         // 1/delta^2, infinite at delta = 0
};

inline ResourceEstimate resource_table(double L, double P, double delta,
                                       std::size_t m) {
  EncodingParams{m}.validate();
  PredictionParams pred{1.0, P, L, delta};
  pred.validate();
  const double md = static_cast<double>(m);
  ResourceEstimate out;
  out.report.L_prime = m * static_cast<std::size_t>(L);
  out.report.P_prime_bound = (2 * m - 1) * static_cast<std::size_t>(P);
  out.report.P_prime = out.report.P_prime_bound;
  out.delta_ratio_bound = 1.0 / (md * md * md);
  out.sigma_ratio_bound = 1.0 / (md * std::sqrt(md));
  out.report.delta_prime_bound = delta * out.delta_ratio_bound;
  out.P_sqrt_L = P * std::sqrt(L);
  out.sigma = predicted_sigma(pred);
  out.sigma_prime_bound = out.sigma * out.sigma_ratio_bound;
  out.critical_L = delta > 0.0 ? critical_register_size(delta)
                               : std::numeric_limits<double>::infinity();
  return out;
}

struct ScalingFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double residual = 0.0;  // RMS of the log-log residuals
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double residual = 0.0;
};

inline LinearFit fit_linear(const std::vector<double> &x,
                            const std::vector<double> &y) {
  if (x.size() != y.size()) throw ShapeError("x and y differ in length");
  if (x.size() < 2) throw DomainError("linear fit needs at least 2 points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("degenerate x range in fit");
  LinearFit out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (out.intercept + out.slope * x[i]);
    sse += r * r;
  }
  out.residual = std::sqrt(sse / n);
  out.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  return out;
}

// Unweighted least squares of ln y against ln x.
inline ScalingFit fit_power_law(
    const std::vector<std::pair<double, double>> &points) {
  if (points.size() < 3)
    throw DomainError("power-law fit needs at least 3 points");
  std::vector<double> lx, ly;
  for (const auto &[x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
      throw DomainError("power-law fit needs positive finite values");
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
  }
  const LinearFit lin = fit_linear(lx, ly);
  return {lin.slope, std::exp(lin.intercept), lin.residual};
}

enum class Engine { Compressed, Full };

struct SweepConfig {
  std::vector<std::size_t> m_values{1};
  std::vector<std::size_t> L_values{2};
  std::vector<std::size_t> P_values{10};
  std::vector<double> deltas{0.0};
  Benchmark benchmark = Benchmark::Sandwich;
  std::uint64_t seed = 0;
  int exponent = 3;
  bool compensate = false;
  ErrorFrame frame = ErrorFrame::Lab;
  Engine engine = Engine::Compressed;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (m_values.empty() || L_values.empty() || P_values.empty() ||
        deltas.empty())
      throw DomainError("sweep ranges must be nonempty");
    for (auto m : m_values) EncodingParams{m}.validate();
    for (auto d : deltas) CouplingLaw{d, exponent}.validate();
    for (auto L : L_values) {
      if (L < 1) throw DomainError("sweep L values must be >= 1");
      StateVector::check_capacity(L);
      if (engine == Engine::Full)
        for (auto m : m_values) StateVector::check_capacity(m * L);
    }
  }
};

struct QualityRow {
  std::size_t m = 1;
  std::size_t L = 1;
  std::size_t P = 0;
  double delta = 0.0;
  double Q = 1.0;
  double sigma_est = 0.0;  // infinite when Q underflows to 0

  friend bool operator==(const QualityRow &, const QualityRow &) = default;
};

using QualityCurve = std::vector<QualityRow>;

// Quality of one benchmark instance.
inline QualityRow evaluate_point(const SweepConfig &config, std::size_t m,
                                 std::size_t L, std::size_t P, double delta) {
  const bool sandwich = config.benchmark == Benchmark::Sandwich;
  const LogicalCircuit logical =
      sandwich ? sandwich_circuit(L, P) : mirror_circuit(L, P, config.seed);
  const auto compiled = compile_circuit(logical, {m}, delta).first;

  ErrorModel model;
  model.law = {delta, config.exponent};
  model.layout = {m * L, 1.0};
  model.compensate_active_pair = config.compensate;
  model.noisy_gates = !sandwich;
  model.frame = config.frame;

  const SolutionSet logical_solutions{all_zeros(L)};
  double q = 0.0;
  if (config.engine == Engine::Compressed) {
    const auto out =
        run_compressed(compiled, model, {m}, StateVector::basis(all_zeros(L)));
    q = quality(out, logical_solutions);
  } else {
    const auto out =
        run(compiled, model, StateVector::basis(all_zeros(m * L)));
    q = quality(out.final, {encode_basis(all_zeros(L), m)});
  }
  q = std::clamp(q, 0.0, 1.0);
  const double sigma = q > 0.0 ? sigma_from_quality(q)
                               : std::numeric_limits<double>::infinity();
  return {m, L, P, delta, q, sigma};
}

/* Grid order is m, then L, then P, then delta (innermost). Points run on a
 * thread pool; rows land at their grid index, so output is deterministic. */
inline QualityCurve run_sweep(const SweepConfig &config) {
  config.validate();
  struct Point {
    std::size_t m, L, P;
    double delta;
  };
  std::vector<Point> grid;
  for (auto m : config.m_values)
    for (auto L : config.L_values)
      for (auto P : config.P_values)
        for (auto d : config.deltas) grid.push_back({m, L, P, d});

  QualityCurve rows(grid.size());
  unsigned workers = config.threads ? config.threads
                                    : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(grid.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        const auto &p = grid[i];
        rows[i] = evaluate_point(config, p.m, p.L, p.P, p.delta);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  for (auto &f : failures)
    if (f) std::rethrow_exception(f);
  return rows;
}

enum class SweepAxis { M, L, P, Delta };

inline std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::M: return "m";
    case SweepAxis::L: return "L";
    case SweepAxis::P: return "P";
    case SweepAxis::Delta: return "delta";
  }
  return "?";
}

/* Power-law fit of sigma_est against one axis. Rows with Q > 1 - 1e-12 or
 * infinite sigma are left out. */
inline ScalingFit fit_sigma(const QualityCurve &curve, SweepAxis axis) {
  std::vector<std::pair<double, double>> pts;
  for (const auto &r : curve) {
    if (r.Q > 1.0 - 1e-12 || !std::isfinite(r.sigma_est)) continue;
    double x = 0.0;
    switch (axis) {
      case SweepAxis::M: x = static_cast<double>(r.m); break;
      case SweepAxis::L: x = static_cast<double>(r.L); break;
      case SweepAxis::P: x = static_cast<double>(r.P); break;
      case SweepAxis::Delta: x = r.delta; break;
    }
    pts.emplace_back(x, r.sigma_est);
  }
  return fit_power_law(pts);
}

// ln Q against delta^2; linear when Q follows exp(-sigma^2) with sigma ~ delta.
inline LinearFit fit_log_quality_vs_delta_squared(const QualityCurve &curve) {
  std::vector<double> x, y;
  for (const auto &r : curve) {
    if (!(r.Q > 0.0)) continue;
    x.push_back(r.delta * r.delta);
    y.push_back(std::log(r.Q));
  }
  return fit_linear(x, y);
}

/* Rescales delta1 until the largest sigma_est on the grid is close to
 * `target`. sigma is close to linear in delta1 while small, so a few
 * proportional updates suffice. */
inline double calibrate_delta(SweepConfig config, double target,
                              double initial = 1e-3, int iterations = 6) {
  if (!(target > 0.0)) throw DomainError("target sigma must be positive");
  double delta = initial;
  for (int it = 0; it < iterations; ++it) {
    config.deltas = {delta};
    double worst = 0.0;
    for (const auto &r : run_sweep(config))
      worst = std::max(worst, r.sigma_est);
    if (!(worst > 0.0) || !std::isfinite(worst))
      throw DomainError("cannot calibrate: sigma_est is zero or infinite");
    delta *= target / worst;
  }
  return delta;
}

}  // namespace qspacer
