// Copyright 2026 The qalg developers
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

// Command-line front end. Every subcommand prints one JSON report on
// stdout (schema documented in the README): identical command, inputs
// and seed produce a byte-identical "outputs" object. Exit codes:
// 0 success, 1 algorithmic failure (retry budgets exhausted, no match),
// 2 usage or precondition error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qalg/qalg.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kDumpQubitLimit = 12;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  bool pretty = false;
  bool force = false;
  int max_qubits = 24;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  std::optional<std::uint64_t> seed;
  std::uint64_t oracle_calls = 0;
  int register_qubits = 0;
  bool failed = false;  // emit the report, then exit 1
};

void emit(const Report& r, const GlobalFlags& flags,
          std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = r.command;
  doc["inputs"] = r.inputs;
  doc["outputs"] = r.outputs;
  if (r.seed.has_value()) {
    doc["seed"] = *r.seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["oracle_calls"] = r.oracle_calls;
  doc["register_qubits"] = r.register_qubits;
  doc["wall_time_ms"] = elapsed.count();
  std::cout << (flags.pretty ? doc.dump(2) : doc.dump()) << "\n";
}

std::mt19937_64 require_seed(const GlobalFlags& flags,
                             const std::string& command) {
  if (!flags.seed.has_value()) {
    throw UsageError(command + " is stochastic: --seed is required");
  }
  return std::mt19937_64(*flags.seed);
}

json amplitudes_json(const qalg::QuantumRegister& reg) {
  json arr = json::array();
  for (const qalg::Complex& a : reg.amplitudes()) {
    arr.push_back(json::array({a.real(), a.imag()}));
  }
  return arr;
}

qalg::OracleFunction truth_table_oracle(const std::string& table) {
  if (table.size() > (std::size_t{1} << 16)) {
    throw UsageError("truth tables are capped at 65536 entries; "
                     "use --target for larger spaces");
  }
  if (table.empty() || (table.size() & (table.size() - 1)) != 0) {
    throw UsageError("truth table length must be a power of two");
  }
  return qalg::OracleFunction::from_bitstring(table);
}

std::uint64_t parse_hex(const std::string& text) {
  std::size_t used = 0;
  const std::uint64_t value = std::stoull(text, &used, 16);
  if (used != text.size()) throw UsageError("malformed hex value: " + text);
  return value;
}

// ---------------------------------------------------------------------
// Subcommand runners. Each fills a Report; `failed` marks exit code 1.

Report run_mz(double phi0, double phi1) {
  Report r;
  r.command = "mz";
  r.inputs = {{"phi0", phi0}, {"phi1", phi1}};
  const auto [p0, p1] = qalg::mach_zehnder(phi0, phi1);
  r.outputs = {{"p0", p0}, {"p1", p1}};
  r.register_qubits = 1;
  return r;
}

Report run_deutsch(const std::string& table) {
  if (table.size() != 2) {
    throw UsageError("deutsch needs a 2-bit truth table, e.g. --f 01");
  }
  const qalg::OracleFunction f = truth_table_oracle(table);
  Report r;
  r.command = "deutsch";
  r.inputs = {{"f", table}};
  const qalg::DeutschVerdict v = qalg::deutsch(f);
  r.outputs = {
      {"verdict",
       v.verdict == qalg::DeutschVerdict::Kind::kConstant ? "constant"
                                                          : "balanced"},
      {"measured_bit", v.measured_bit},
  };
  r.oracle_calls = f.calls();
  r.register_qubits = 2;
  return r;
}

Report run_qft(const GlobalFlags& flags, int n, std::uint64_t x,
               std::optional<int> approx, bool dump) {
  Report r;
  r.command = "qft";
  r.inputs = {{"n", n}, {"x", x}};
  if (approx.has_value()) r.inputs["approx"] = *approx;
  qalg::QuantumRegister reg(n, x);
  const auto qubits = qalg::qubit_range(0, n);
  if (approx.has_value()) {
    qalg::approximate_qft(reg, qubits, *approx);
    qalg::QuantumRegister exact(n, x);
    qalg::qft(exact, qubits);
    r.outputs["fidelity_vs_exact"] = qalg::state_fidelity(exact, reg);
  } else {
    qalg::qft(reg, qubits);
  }
  if (dump) {
    if (n > kDumpQubitLimit && !flags.force) {
      throw UsageError("state dumps above 12 qubits need --force");
    }
    r.outputs["state"] = amplitudes_json(reg);
  }
  r.outputs["norm"] = reg.norm();
  r.register_qubits = n;
  return r;
}

Report run_phase_estimate(const GlobalFlags& flags, double omega, int bits,
                          std::optional<double> delta) {
  std::mt19937_64 rng = require_seed(flags, "phase-estimate");
  Report r;
  r.command = "phase-estimate";
  r.seed = flags.seed;
  r.inputs = {{"omega", omega}, {"bits", bits}};
  const qalg::ControlledPowerDevice dev = qalg::phase_power_device(omega);
  const qalg::QuantumRegister eigen(1, 1);
  qalg::PhaseEstimate est;
  int total_control_bits = bits;
  if (delta.has_value()) {
    r.inputs["delta"] = *delta;
    est = qalg::boosted_estimate(dev, eigen, bits, *delta, rng);
    total_control_bits = bits + qalg::boosted_extra_bits(*delta);
    r.outputs["extra_bits"] = qalg::boosted_extra_bits(*delta);
    r.outputs["success_probability"] =
        qalg::boosted_success_probability(omega, bits, *delta);
  } else {
    est = qalg::estimate_phase(dev, eigen, bits, rng);
    const auto dist = qalg::exact_output_distribution(
        2.0 * std::numbers::pi * omega, bits);
    const auto best = qalg::best_estimates(omega, bits);
    double p_best = 0.0;
    for (std::uint64_t y : best) p_best += dist[y];
    r.outputs["probability_of_y"] = dist[est.y];
    r.outputs["best_y"] = best.front();
    r.outputs["best_probability"] = p_best;
  }
  r.outputs["y"] = est.y;
  r.outputs["omega_hat"] = est.omega_hat;
  r.outputs["bits"] = est.n_bits;
  r.oracle_calls = *dev.base_applications;
  r.register_qubits = total_control_bits + 1;
  return r;
}

Report run_order(const GlobalFlags& flags, std::uint64_t a, std::uint64_t N,
                 std::optional<int> bits) {
  std::mt19937_64 rng = require_seed(flags, "order");
  Report r;
  r.command = "order";
  r.seed = flags.seed;
  r.inputs = {{"a", a}, {"n", N}};
  if (bits.has_value()) r.inputs["bits"] = *bits;
  qalg::OrderFindingRun info;
  const std::optional<qalg::u64> order =
      qalg::shor_order(a, N, bits, rng, &info);
  r.outputs["control_bits"] = info.control_bits;
  r.outputs["target_bits"] = info.target_bits;
  r.outputs["measured_y"] = info.measured_y;
  if (info.convergent.has_value()) {
    r.outputs["convergent"] = {{"numerator", info.convergent->numerator},
                               {"denominator", info.convergent->denominator}};
  }
  if (order.has_value()) {
    r.outputs["r"] = *order;
    r.outputs["found"] = true;
  } else {
    r.outputs["found"] = false;
    r.failed = true;
  }
  r.oracle_calls = info.controlled_gate_applications;
  r.register_qubits = info.control_bits + info.target_bits;
  return r;
}

Report run_factor(const GlobalFlags& flags, std::uint64_t N,
                  int max_attempts) {
  std::mt19937_64 rng = require_seed(flags, "factor");
  Report r;
  r.command = "factor";
  r.seed = flags.seed;
  r.inputs = {{"n", N}, {"max_attempts", max_attempts}};
  qalg::ShorFactorStats stats;
  const qalg::Factorization f =
      qalg::shor_factor(N, rng, max_attempts, &stats);
  json factors = json::object();
  for (const auto& [p, e] : f.prime_powers) {
    factors[std::to_string(p)] = e;
  }
  r.outputs["factors"] = factors;
  r.outputs["order_runs"] = stats.order_runs;
  r.outputs["splittings"] = stats.splittings;
  r.oracle_calls = stats.controlled_gate_applications;
  r.register_qubits = stats.max_register_qubits;
  return r;
}

Report run_search(const GlobalFlags& flags, const std::string& table,
                  std::optional<std::uint64_t> target,
                  std::optional<int> bits,
                  std::optional<std::uint64_t> solutions, int max_retries) {
  std::mt19937_64 rng = require_seed(flags, "search");
  Report r;
  r.command = "search";
  r.seed = flags.seed;

  std::optional<qalg::OracleFunction> f;
  int n = 0;
  if (!table.empty()) {
    f = truth_table_oracle(table);
    n = f->domain_bits();
    r.inputs["truth_table"] = table;
  } else if (target.has_value() && bits.has_value()) {
    n = *bits;
    const std::uint64_t t = *target;
    if (n < 1 || t >= (std::uint64_t{1} << n)) {
      throw UsageError("--target must fit in --bits");
    }
    f = qalg::OracleFunction(
        n, 2, [t](std::uint64_t x) { return x == t ? 1ull : 0ull; });
    r.inputs["target"] = t;
    r.inputs["bits"] = n;
  } else {
    throw UsageError("search needs --truth-table or --target with --bits");
  }
  if (solutions.has_value()) r.inputs["solutions"] = *solutions;

  const auto res = qalg::grover_search(*f, solutions, rng, max_retries);
  const std::uint64_t N = std::uint64_t{1} << n;
  r.register_qubits = n;
  r.oracle_calls = f->calls();
  if (res.has_value()) {
    r.outputs["result"] = res->result;
    r.outputs["iterations"] = res->iterations;
    r.outputs["attempts"] = res->attempts;
    r.outputs["solutions_assumed"] = res->solutions_assumed;
    r.outputs["oracle_calls_per_attempt"] = res->iterations + 1;
    r.outputs["found"] = true;
    if (res->counted) {
      r.outputs["counting_applications"] = res->counting_applications;
      r.register_qubits = n + (n + 1) / 2 + 2;
    }
    r.outputs["classical_evaluations_expected"] =
        static_cast<double>(N) /
        static_cast<double>(std::max<std::uint64_t>(res->solutions_assumed, 1));
  } else {
    r.outputs["found"] = false;
    r.failed = true;
  }
  return r;
}

Report run_count(const GlobalFlags& flags, const std::string& table,
                 int precision) {
  std::mt19937_64 rng = require_seed(flags, "count");
  const qalg::OracleFunction f = truth_table_oracle(table);
  Report r;
  r.command = "count";
  r.seed = flags.seed;
  r.inputs = {{"truth_table", table}, {"precision", precision}};
  const qalg::CountingResult c = qalg::quantum_count(f, precision, rng);
  r.outputs["omega_estimate"] = c.omega_estimate;
  r.outputs["j_estimate"] = c.j_estimate;
  r.outputs["j_rounded"] = c.j_rounded;
  r.outputs["grover_applications"] = c.grover_applications;
  r.outputs["classical_evaluations"] = f.domain_size();
  r.oracle_calls = f.calls();
  r.register_qubits = f.domain_bits() + precision;
  return r;
}

Report run_simon(const GlobalFlags& flags, int n, const std::string& mask_hex,
                 std::optional<int> max_queries) {
  std::mt19937_64 rng = require_seed(flags, "simon");
  const std::uint64_t mask = parse_hex(mask_hex);
  if (n < 1 || mask >= (std::uint64_t{1} << n)) {
    throw UsageError("--mask must fit in --n bits");
  }
  Report r;
  r.command = "simon";
  r.seed = flags.seed;
  const int budget = max_queries.value_or(10 * n);
  r.inputs = {{"n", n}, {"mask", mask_hex}, {"max_queries", budget}};
  const std::vector<std::uint64_t> gens =
      mask == 0 ? std::vector<std::uint64_t>{}
                : std::vector<std::uint64_t>{mask};
  const qalg::HiddenSubgroupInstance inst =
      qalg::coset_oracle_instance(n, gens);
  const auto res = qalg::simon_solve(inst, rng, budget);
  r.oracle_calls = inst.oracle.calls();
  r.register_qubits = 2 * n;
  if (res.has_value()) {
    json out = json::array();
    json out_hex = json::array();
    for (std::uint64_t g : res->generators) {
      out.push_back(g);
      char buf[32];
      std::snprintf(buf, sizeof buf, "0x%llx",
                    static_cast<unsigned long long>(g));
      out_hex.push_back(std::string(buf));
    }
    r.outputs["generators"] = out;
    r.outputs["generators_hex"] = out_hex;
    r.outputs["queries"] = res->queries;
    r.outputs["found"] = true;
  } else {
    r.outputs["found"] = false;
    r.failed = true;
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statevector quantum algorithm simulator"};
  app.require_subcommand(1);

  GlobalFlags flags;
  std::uint64_t seed_value = 0;
  auto* seed_opt =
      app.add_option("--seed", seed_value,
                     "RNG seed (required for stochastic subcommands)");
  app.add_flag("--pretty", flags.pretty, "indent the JSON report");
  app.add_flag("--json", "emit compact JSON (default)");
  app.add_flag("--force", flags.force, "allow large state dumps");
  app.add_option("--max-qubits", flags.max_qubits,
                 "largest register the simulator may allocate")
      ->default_val(24);

  // mz
  double phi0 = 0.0, phi1 = 0.0;
  auto* mz = app.add_subcommand("mz", "Mach-Zehnder interferometer");
  mz->add_option("--phi0", phi0, "lower-arm phase shift")->required();
  mz->add_option("--phi1", phi1, "upper-arm phase shift")->required();

  // deutsch
  std::string deutsch_table;
  auto* de = app.add_subcommand("deutsch", "constant-vs-balanced verdict");
  de->add_option("--f", deutsch_table, "2-bit truth table (f(0)f(1))")
      ->required();

  // qft
  int qft_n = 0;
  std::uint64_t qft_x = 0;
  int qft_approx = -1;
  bool qft_dump = false;
  auto* qf = app.add_subcommand("qft", "quantum Fourier transform of |x>");
  qf->add_option("--n", qft_n, "register width in qubits")->required();
  qf->add_option("--x", qft_x, "basis input")->required();
  auto* approx_opt =
      qf->add_option("--approx", qft_approx,
                     "drop rotations smaller than pi/2^k");
  qf->add_flag("--dump-state", qft_dump, "include amplitudes in the report");

  // phase-estimate
  double pe_omega = 0.0;
  int pe_bits = 0;
  double pe_delta = 0.0;
  auto* pe = app.add_subcommand("phase-estimate",
                                "estimate omega of e^{2 pi i omega}");
  pe->add_option("--omega", pe_omega, "true phase fraction in [0,1)")
      ->required();
  pe->add_option("--bits", pe_bits, "estimate bits")->required();
  auto* delta_opt = pe->add_option(
      "--delta", pe_delta, "failure budget; adds boosting qubits");

  // order
  std::uint64_t ord_a = 0, ord_n = 0;
  int ord_bits = 0;
  auto* od = app.add_subcommand("order", "multiplicative order of a mod N");
  od->add_option("--a", ord_a, "base")->required();
  od->add_option("--n", ord_n, "modulus")->required();
  auto* ord_bits_opt =
      od->add_option("--bits", ord_bits, "control register width");

  // factor
  std::uint64_t fac_n = 0;
  int fac_attempts = 20;
  auto* fa = app.add_subcommand("factor", "prime factorization");
  fa->add_option("--n", fac_n, "number to factor")->required();
  fa->add_option("--max-attempts", fac_attempts,
                 "random-base attempts per composite")
      ->default_val(20);

  // search
  std::string search_table;
  std::uint64_t search_target = 0;
  int search_bits = 0;
  std::uint64_t search_solutions = 0;
  int search_retries = 16;
  auto* se = app.add_subcommand("search", "amplitude-amplified search");
  se->add_option("--truth-table", search_table, "bitstring, index i = f(i)");
  auto* target_opt =
      se->add_option("--target", search_target, "single solution index");
  auto* bits_opt = se->add_option("--bits", search_bits,
                                  "register width for --target mode");
  auto* sol_opt = se->add_option("--solutions", search_solutions,
                                 "known solution count (skips counting)");
  se->add_option("--max-retries", search_retries, "attempt budget")
      ->default_val(16);

  // count
  std::string count_table;
  int count_precision = 0;
  auto* co = app.add_subcommand("count", "approximate solution counting");
  co->add_option("--truth-table", count_table, "bitstring, index i = f(i)")
      ->required();
  co->add_option("--precision", count_precision, "phase-estimate qubits")
      ->required();

  // simon
  int simon_n = 0;
  std::string simon_mask;
  int simon_queries = 0;
  auto* si = app.add_subcommand("simon", "hidden subgroup over Z_2^n");
  si->add_option("--n", simon_n, "group size in bits")->required();
  si->add_option("--mask", simon_mask, "hidden mask (hex)")->required();
  auto* queries_opt =
      si->add_option("--max-queries", simon_queries, "query budget");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (seed_opt->count() > 0) flags.seed = seed_value;
  qalg::config::set_max_qubits(flags.max_qubits);

  const auto start = std::chrono::steady_clock::now();
  try {
    Report report;
    if (mz->parsed()) {
      report = run_mz(phi0, phi1);
    } else if (de->parsed()) {
      report = run_deutsch(deutsch_table);
    } else if (qf->parsed()) {
      report = run_qft(flags, qft_n, qft_x,
                       approx_opt->count() ? std::optional<int>(qft_approx)
                                           : std::nullopt,
                       qft_dump);
    } else if (pe->parsed()) {
      report = run_phase_estimate(
          flags, pe_omega, pe_bits,
          delta_opt->count() ? std::optional<double>(pe_delta)
                             : std::nullopt);
    } else if (od->parsed()) {
      report = run_order(flags, ord_a, ord_n,
                         ord_bits_opt->count() ? std::optional<int>(ord_bits)
                                               : std::nullopt);
    } else if (fa->parsed()) {
      report = run_factor(flags, fac_n, fac_attempts);
    } else if (se->parsed()) {
      report = run_search(
          flags, search_table,
          target_opt->count() ? std::optional<std::uint64_t>(search_target)
                              : std::nullopt,
          bits_opt->count() ? std::optional<int>(search_bits) : std::nullopt,
          sol_opt->count() ? std::optional<std::uint64_t>(search_solutions)
                           : std::nullopt,
          search_retries);
    } else if (co->parsed()) {
      report = run_count(flags, count_table, count_precision);
    } else if (si->parsed()) {
      report = run_simon(flags, simon_n, simon_mask,
                         queries_opt->count()
                             ? std::optional<int>(simon_queries)
                             : std::nullopt);
    }
    emit(report, flags, start);
    return report.failed ? 1 : 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
