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

// Command-line front end: compile, run, sweep, estimate, dualrail.
//
// Exit codes: 0 success, 1 other failure, 2 parse error, 3 unsupported gate,
// 4 register over capacity.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qspacer/io.hpp"
#include "qspacer/qspacer.hpp"

namespace {

using namespace qspacer;
using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParse = 2,
  kUnsupported = 3,
  kCapacity = 4,
};

struct CliConfig {
  std::string input;
  std::string output;
  std::string solutions;
  std::string format = "csv";
  std::string estimate_format = "text";
  std::string frame = "lab";
  std::string engine = "compressed";
  std::string benchmark = "sandwich";
  std::size_t m = 1;
  double delta = 0.0;
  int exponent = 3;
  bool compensate = false;
  bool idle_only = false;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  // sweep ranges
  std::string m_range = "1";
  std::string L_range = "2";
  std::string P_range = "10";
  std::string delta_range = "0";
  // estimate
  double L = 1;
  double P = 0;
  double C = 1;
  // dualrail
  std::string D_range = "10:100";
  double r = 1;
  double g = 1;
};

ErrorFrame parse_frame(const std::string &s) {
  if (s == "lab") return ErrorFrame::Lab;
  if (s == "spacer") return ErrorFrame::Spacer;
  throw DomainError("unknown frame '" + s + "' (lab|spacer)");
}

Engine parse_engine(const std::string &s) {
  if (s == "compressed") return Engine::Compressed;
  if (s == "full") return Engine::Full;
  throw DomainError("unknown engine '" + s + "' (compressed|full)");
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double to_double(const std::string &s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != s.size() || s.empty())
    throw DomainError("not a number: '" + s + "'");
  return v;
}

/* "a,b,c" lists or "lo:hi[:step]" inclusive ranges. */
std::vector<double> parse_range(const std::string &text) {
  std::vector<double> out;
  for (const auto &item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(to_double(parts[0]));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const double lo = to_double(parts[0]);
      const double hi = to_double(parts[1]);
      const double step = parts.size() == 3 ? to_double(parts[2]) : 1.0;
      if (!(step > 0.0) || hi < lo)
        throw DomainError("bad range '" + item + "'");
      const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
      for (std::size_t i = 0; i <= count; ++i) out.push_back(lo + step * i);
    } else {
      throw DomainError("bad range '" + item + "'");
    }
  }
  if (out.empty()) throw DomainError("empty range '" + text + "'");
  return out;
}

std::vector<std::size_t> parse_counts(const std::string &text) {
  std::vector<std::size_t> out;
  for (double v : parse_range(text)) {
    if (v < 0 || v != std::floor(v))
      throw DomainError("expected non-negative integers in '" + text + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void emit(const CliConfig &cfg, const std::string &content) {
  if (cfg.output.empty())
    std::cout << content;
  else
    io::write_file(cfg.output, content);
}

int cmd_compile(const CliConfig &cfg) {
  const auto logical = io::parse_logical_circuit(io::read_file(cfg.input));
  const auto [physical, report] =
      compile_circuit(logical, {cfg.m}, cfg.delta > 0 ? cfg.delta : 1.0);
  emit(cfg, io::to_json(physical).dump(2) + "\n");
  std::ostream &log = cfg.output.empty() ? std::cerr : std::cout;
  log << "L        " << logical.qubits << "\n"
      << "P        " << logical.step_count() << "\n"
      << "L'       " << report.L_prime << "\n"
      << "P'       " << report.P_prime << "\n"
      << "P' bound " << report.P_prime_bound << "\n"
      << "delta' bound " << io::format_number(report.delta_prime_bound)
      << (cfg.delta > 0 ? "" : "  (relative to delta = 1)") << "\n";
  return kOk;
}

int cmd_run(const CliConfig &cfg) {
  const std::string text = io::read_file(cfg.input);
  PhysicalCircuit circuit;
  std::size_t logical_qubits = 0;
  std::size_t m = cfg.m;
  if (io::is_compiled_document(text)) {
    circuit = io::parse_physical_circuit(text);
    m = circuit.encoding->m;
    logical_qubits = circuit.encoding->logical_qubits;
  } else {
    const auto logical = io::parse_logical_circuit(text);
    circuit = compile_circuit(logical, {m}).first;
    logical_qubits = logical.qubits;
  }
  StateVector::check_capacity(circuit.qubits);

  SolutionSet solutions;
  if (cfg.solutions.empty())
    solutions.push_back(all_zeros(logical_qubits));
  else
    solutions = io::parse_solutions(io::read_file(cfg.solutions));

  ErrorModel model;
  model.law = {cfg.delta, cfg.exponent};
  model.layout = {circuit.qubits, 1.0};
  model.compensate_active_pair = cfg.compensate;
  model.noisy_gates = !cfg.idle_only;
  model.frame = parse_frame(cfg.frame);

  const BasisState zeros = all_zeros(circuit.qubits);
  const auto result = run(circuit, model, StateVector::basis(zeros));
  SolutionSet physical_solutions;
  for (const auto &s : solutions) physical_solutions.push_back(encode_basis(s, m));
  const double q = std::clamp(quality(result.final, physical_solutions), 0.0, 1.0);

  std::cout << "Q          " << fixed(q, 6) << "\n";
  if (q > 0.0)
    std::cout << "sigma_est  " << fixed(sigma_from_quality(q), 6) << "\n";
  else
    std::cout << "sigma_est  inf\n";
  std::cout << "steps      " << result.steps_executed << "\n";
  std::cout << "spacers    "
            << (result.spacer_check.empty()
                    ? "n/a"
                    : (result.spacers_clear() ? "clear" : "LEAKED"))
            << "\n";

  if (!cfg.output.empty()) {
    const auto data = restrict_to_data(result.final, home_positions(logical_qubits, m));
    json amps = json::array();
    for (const auto &a : data.amplitudes()) amps.push_back({a.real(), a.imag()});
    io::write_file(cfg.output, json{{"qubits", logical_qubits},
                                    {"Q", q},
                                    {"amplitudes", amps}}
                                       .dump(2) +
                                   "\n");
  }
  return kOk;
}

int cmd_sweep(const CliConfig &cfg) {
  SweepConfig sweep;
  sweep.m_values = parse_counts(cfg.m_range);
  sweep.L_values = parse_counts(cfg.L_range);
  sweep.P_values = parse_counts(cfg.P_range);
  sweep.deltas = parse_range(cfg.delta_range);
  sweep.benchmark = parse_benchmark(cfg.benchmark);
  sweep.seed = cfg.seed;
  sweep.exponent = cfg.exponent;
  sweep.compensate = cfg.compensate;
  sweep.frame = parse_frame(cfg.frame);
  sweep.engine = parse_engine(cfg.engine);
  sweep.threads = cfg.threads;
  const auto curve = run_sweep(sweep);

  // Fit against every axis that actually varies.
  json fits = json::object();
  std::ostringstream text;
  auto try_fit = [&](SweepAxis axis, std::size_t distinct) {
    if (distinct < 3) return;
    const std::string name = to_string(axis);
    try {
      const auto fit = fit_sigma(curve, axis);
      fits["sigma_vs_" + name] = io::to_json(fit);
      text << "fit sigma_est ~ " << name << "^k: k = " << io::format_number(fit.exponent)
           << ", prefactor = " << io::format_number(fit.prefactor)
           << ", rms residual = " << io::format_number(fit.residual) << "\n";
    } catch (const DomainError &e) {
      text << "fit sigma_est vs " << name << " skipped: " << e.what() << "\n";
    }
  };
  try_fit(SweepAxis::M, sweep.m_values.size());
  try_fit(SweepAxis::L, sweep.L_values.size());
  try_fit(SweepAxis::P, sweep.P_values.size());
  try_fit(SweepAxis::Delta, sweep.deltas.size());
  if (sweep.deltas.size() >= 2 && sweep.m_values.size() == 1 &&
      sweep.L_values.size() == 1 && sweep.P_values.size() == 1) {
    const auto lin = fit_log_quality_vs_delta_squared(curve);
    fits["lnQ_vs_delta2"] = {{"slope", lin.slope},
                             {"intercept", lin.intercept},
                             {"r_squared", lin.r_squared}};
    text << "fit ln Q vs delta^2: slope = " << io::format_number(lin.slope)
         << ", R^2 = " << io::format_number(lin.r_squared) << "\n";
  }

  if (cfg.format == "json") {
    emit(cfg, json{{"rows", io::to_json(curve)}, {"fits", fits}}.dump(2) + "\n");
    if (!cfg.output.empty()) std::cout << text.str();
  } else if (cfg.format == "csv") {
    emit(cfg, io::to_csv(curve));
    (cfg.output.empty() ? std::cerr : std::cout) << text.str();
  } else {
    throw DomainError("unknown format '" + cfg.format + "' (csv|json)");
  }
  return kOk;
}

int cmd_estimate(const CliConfig &cfg) {
  const auto est = resource_table(cfg.L, cfg.P, cfg.delta, cfg.m);
  const double sigma = predicted_sigma({cfg.C, cfg.P, cfg.L, cfg.delta});
  auto num = io::format_number;
  if (cfg.estimate_format == "json") {
    json out{{"L", cfg.L},
             {"P", cfg.P},
             {"delta", cfg.delta},
             {"m", cfg.m},
             {"C", cfg.C},
             {"P_sqrt_L", est.P_sqrt_L},
             {"sigma", sigma},
             {"L_prime", est.report.L_prime},
             {"P_prime_bound", est.report.P_prime_bound},
             {"delta_prime_bound", est.report.delta_prime_bound},
             {"sigma_prime_bound", sigma * est.sigma_ratio_bound},
             {"delta_ratio_bound", est.delta_ratio_bound},
             {"sigma_ratio_bound", est.sigma_ratio_bound}};
    out["critical_L"] = std::isfinite(est.critical_L) ? json(est.critical_L) : json(nullptr);
    emit(cfg, out.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream o;
  o << "P*sqrt(L)           " << num(est.P_sqrt_L) << "\n"
    << "sigma = C P sqrt(L) delta   " << num(sigma) << "\n"
    << "L' = m L            " << est.report.L_prime << "\n"
    << "P' bound (2m-1) P   " << est.report.P_prime_bound << "\n"
    << "delta' bound        " << num(est.report.delta_prime_bound) << "\n"
    << "sigma' bound        " << num(sigma * est.sigma_ratio_bound) << "\n"
    << "delta'/delta        " << num(est.delta_ratio_bound) << "\n"
    << "sigma'/sigma        " << num(est.sigma_ratio_bound) << "\n"
    << "critical L = 1/delta^2  "
    << (std::isfinite(est.critical_L) ? num(est.critical_L) : std::string("inf")) << "\n";
  emit(cfg, o.str());
  return kOk;
}

int cmd_dualrail(const CliConfig &cfg) {
  const auto Ds = parse_range(cfg.D_range);
  std::vector<std::pair<double, double>> pts;
  std::ostringstream o;
  o << "D,nonadditive\n";
  bool all_zero = true;
  for (double D : Ds) {
    const double v = coulomb_nonadditive(D, cfg.r, cfg.g);
    all_zero &= v == 0.0;
    pts.emplace_back(D, std::abs(v));
    o << io::format_number(D) << "," << io::format_number(v) << "\n";
  }
  emit(cfg, o.str());
  std::ostream &log = cfg.output.empty() ? std::cerr : std::cout;
  if (all_zero) {
    log << "all nonadditive values are 0 (g = 0): no exponent to fit\n";
    return kOther;
  }
  const auto fit = fit_power_law(pts);
  log << "fitted exponent " << io::format_number(fit.exponent)
      << "  (deviation from -3: " << io::format_number(fit.exponent + 3.0) << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"qspacer: spacer-qubit encoding compiler and interaction-error simulator"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_model = [&](CLI::App *sub) {
    sub->add_option("--delta", cfg.delta, "nearest-neighbour coupling delta1");
    sub->add_option("--exponent", cfg.exponent, "distance decay power p");
    sub->add_flag("--compensate", cfg.compensate,
                  "absorb the known phase of the pair under a two-qubit gate");
    sub->add_option("--frame", cfg.frame, "lab | spacer");
  };

  auto *compile = app.add_subcommand("compile", "spacer-encode a logical circuit");
  compile->add_option("--input", cfg.input)->required();
  compile->add_option("--output", cfg.output);
  compile->add_option("--m", cfg.m, "spacer multiplicity");
  compile->add_option("--delta", cfg.delta, "coupling for the delta' bound");

  auto *runc = app.add_subcommand("run", "simulate a circuit and report quality");
  runc->add_option("--input", cfg.input)->required();
  runc->add_option("--output", cfg.output, "write data-qubit amplitudes (JSON)");
  runc->add_option("--m", cfg.m, "spacer multiplicity for logical inputs");
  runc->add_option("--solutions", cfg.solutions, "file of solution bitstrings");
  runc->add_flag("--idle-only", cfg.idle_only, "only wait steps accumulate error");
  runc->add_option("--seed", cfg.seed);
  add_model(runc);

  auto *sweep = app.add_subcommand("sweep", "quality sweep over (m, L, P, delta)");
  sweep->add_option("--m", cfg.m_range, "values: a,b,c or lo:hi[:step]");
  sweep->add_option("--L", cfg.L_range);
  sweep->add_option("--P", cfg.P_range);
  sweep->add_option("--delta", cfg.delta_range);
  sweep->add_option("--exponent", cfg.exponent);
  sweep->add_flag("--compensate", cfg.compensate);
  sweep->add_option("--frame", cfg.frame, "lab | spacer");
  sweep->add_option("--engine", cfg.engine, "compressed | full");
  sweep->add_option("--benchmark", cfg.benchmark, "sandwich | mirror");
  sweep->add_option("--seed", cfg.seed);
  sweep->add_option("--threads", cfg.threads);
  sweep->add_option("--format", cfg.format, "csv | json");
  sweep->add_option("--output", cfg.output);

  auto *estimate = app.add_subcommand("estimate", "resource and dispersion table");
  estimate->add_option("--L", cfg.L)->required();
  estimate->add_option("--P", cfg.P)->required();
  estimate->add_option("--delta", cfg.delta);
  estimate->add_option("--m", cfg.m);
  estimate->add_option("--C", cfg.C);
  estimate->add_option("--format", cfg.estimate_format, "text | json");
  estimate->add_option("--output", cfg.output);

  auto *dual = app.add_subcommand("dualrail", "dual-rail Coulomb nonadditive scaling");
  dual->add_option("--D", cfg.D_range, "separations: list or lo:hi[:step]");
  dual->add_option("--r", cfg.r, "rail spacing");
  dual->add_option("--g", cfg.g, "interaction scale");
  dual->add_option("--output", cfg.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kOther;
  }

  try {
    if (*compile) return cmd_compile(cfg);
    if (*runc) return cmd_run(cfg);
    if (*sweep) return cmd_sweep(cfg);
    if (*estimate) return cmd_estimate(cfg);
    if (*dual) return cmd_dualrail(cfg);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnsupportedGateError &e) {
    std::cerr << "unsupported gate: " << e.what() << "\n";
    return kUnsupported;
  } catch (const CapacityError &e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
