// Copyright 2026 The densecode Authors
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

#include "densecode/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "densecode/bases.hpp"
#include "densecode/ghzmeasure.hpp"
#include "densecode/qstate.hpp"

namespace densecode::cli {
namespace {

using nlohmann::json;

// Human-readable numbers use 12 significant digits.
std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// bases

struct BasesOptions {
  std::string basis = "ghz";
  std::string index;
  bool json = false;
};

int bases_verify(const BasesOptions& o, std::ostream& out) {
  const auto catalog = BasisCatalog::builtin(parse_basis_name(o.basis));
  const auto report = verify_orthonormal(catalog);
  const double completeness = resolution_of_identity_error(catalog);
  const bool ok = report.within(kTolerance) && completeness <= kTolerance;
  if (o.json) {
    print_json(out, {{"basis", catalog.name()},
                     {"states", catalog.size()},
                     {"n_qubits", catalog.n_qubits()},
                     {"max_off_diagonal", report.max_off_diagonal},
                     {"max_norm_defect", report.max_norm_defect},
                     {"resolution_of_identity_error", completeness},
                     {"tolerance", kTolerance},
                     {"ok", ok}});
  } else {
    out << "basis " << catalog.name() << " (" << catalog.size() << " states, "
        << catalog.n_qubits() << " qubits)\n"
        << "  max off-diagonal |<i|j>|      " << num(report.max_off_diagonal) << '\n'
        << "  max |1 - <i|i>|               " << num(report.max_norm_defect) << '\n'
        << "  resolution of identity error  " << num(completeness) << '\n'
        << "  tolerance                     " << num(kTolerance) << '\n'
        << (ok ? "ok\n" : "FAILED\n");
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int bases_dump(const BasesOptions& o, std::ostream& out) {
  const auto catalog = BasisCatalog::builtin(parse_basis_name(o.basis));
  write_state_text(out, catalog.state(parse_basis_index(o.index)));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// encode

struct EncodeOptions {
  int message = 1;
  bool json = false;
};

int encode_command(const EncodeOptions& o, std::ostream& out) {
  const StateVector result = encode(o.message, ghz_state(1));
  const double fidelity = fidelity_up_to_phase(result, ghz_state(o.message));
  const bool ok = fidelity >= 1.0 - kTolerance;
  const std::string bits = message_bits(Protocol::ghz3, o.message);
  if (o.json) {
    json amps = json::array();
    for (std::size_t i = 0; i < result.dim(); ++i) {
      if (result[i] == 0.0) continue;
      amps.push_back({{"index", i}, {"re", result[i].real()}, {"im", result[i].imag()}});
    }
    print_json(out, {{"message", o.message},
                     {"bits", bits},
                     {"fidelity", fidelity},
                     {"ok", ok},
                     {"n_qubits", result.n_qubits()},
                     {"amplitudes", amps}});
  } else {
    out << "# message " << o.message << " bits " << bits << " fidelity with psi_" << o.message
        << " " << num(fidelity) << '\n';
    write_state_text(out, result);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// reach

struct ReachOptions {
  std::string basis = "ghz";
  int qubit = 1;
  bool oracle = false;
  int samples = 10000;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

// Oracle dichotomy thresholds.
constexpr double kOracleReachable = 0.99;
constexpr double kOracleUnreachable = 1e-12;

int reach_command(const ReachOptions& o, std::ostream& out) {
  const auto catalog = BasisCatalog::builtin(parse_basis_name(o.basis));
  if (o.qubit < 1 || o.qubit > catalog.n_qubits()) {
    throw std::invalid_argument("--qubit must lie in 1.." + std::to_string(catalog.n_qubits()));
  }
  const auto matrix = reachability_matrix(catalog, o.qubit);
  const std::size_t n = catalog.size();

  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    ok = ok && matrix.reachable[i][i];
    for (std::size_t j = 0; j < n; ++j) ok = ok && matrix.reachable[i][j] == matrix.reachable[j][i];
  }

  std::vector<std::vector<double>> fidelities;
  if (o.oracle) {
    if (o.samples < 1) throw std::invalid_argument("--samples must be at least 1");
    fidelities = oracle_matrix(catalog, o.qubit, o.samples, o.seed);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        ok = ok && (matrix.reachable[i][j] ? fidelities[i][j] > kOracleReachable
                                           : fidelities[i][j] < kOracleUnreachable);
  }

  if (o.json) {
    json j = json::parse(to_json(matrix));
    if (o.oracle) {
      j["oracle_max_fidelity"] = fidelities;
      j["samples"] = o.samples;
      j["seed"] = o.seed;
    }
    j["ok"] = ok;
    print_json(out, j);
  } else {
    out << "single-qubit reachability, basis " << catalog.name() << ", qubit " << o.qubit
        << " (row = source, column = target, x = reachable)\n    ";
    for (std::size_t j = 1; j <= n; ++j) out << ' ' << j;
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      out << std::setw(3) << i + 1 << ' ';
      for (std::size_t j = 0; j < n; ++j) out << ' ' << (matrix.reachable[i][j] ? 'x' : '.');
      out << '\n';
    }
    if (o.oracle) {
      out << "\noracle max fidelity (" << o.samples << " samples per pair, seed " << o.seed
          << ")\n";
      for (std::size_t i = 0; i < n; ++i) {
        out << std::setw(3) << i + 1 << ' ';
        for (std::size_t j = 0; j < n; ++j) out << ' ' << std::setw(18) << num(fidelities[i][j]);
        out << '\n';
      }
    }
    out << (ok ? "ok\n" : "FAILED\n");
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// network

struct NetworkOptions {
  std::string state_file;
  bool json = false;
};

int network_show(const NetworkOptions& o, std::ostream& out) {
  const Network network = ghz_network();
  bool ok = true;
  json rows = json::array();
  std::ostringstream table;
  for (int j = 1; j <= 8; ++j) {
    const auto p = probabilities(disentangle(ghz_state(j)));
    const std::string outcome = ghz_decode_table().outcome_of(j);
    const double prob = p[parse_bit_string(outcome, 3)];
    ok = ok && prob >= 1.0 - kTolerance && decode(outcome) == j;
    rows.push_back({{"index", j}, {"outcome", outcome}, {"probability", prob}});
    table << "  psi_" << j << "  ->  |" << outcome << ">  probability " << num(prob) << '\n';
  }
  if (o.json) {
    json gate_list = json::array();
    for (const auto& g : network.gates) gate_list.push_back(g.describe());
    print_json(out, {{"gates", gate_list}, {"truth_table", rows}, {"ok", ok}});
  } else {
    out << "GHZ disentangling network (applied top to bottom)\n";
    for (std::size_t i = 0; i < network.gates.size(); ++i)
      out << "  " << i + 1 << ". " << network.gates[i].describe() << '\n';
    out << "truth table\n" << table.str() << (ok ? "ok\n" : "FAILED\n");
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int network_apply(const NetworkOptions& o, std::ostream& out) {
  std::ifstream in(o.state_file);
  if (!in) throw std::runtime_error("cannot open state file '" + o.state_file + "'");
  const StateVector input = read_state_text(in);
  if (input.n_qubits() != 3) {
    throw std::invalid_argument("network apply needs a 3-qubit state");
  }
  const StateVector output = disentangle(input);
  const auto by_index = ghz_probabilities(input);
  if (o.json) {
    print_json(out, {{"outcome_probabilities", probabilities(output)},
                     {"ghz_probabilities", by_index}});
  } else {
    write_state_text(out, output);
    for (std::size_t i = 0; i < by_index.size(); ++i)
      out << "# P(psi_" << i + 1 << ") = " << num(by_index[i]) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// roundtrip

struct RoundtripOptions {
  std::string protocol = "ghz3";
  std::int64_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  double noise = 0.0;
  int message = 0;
  unsigned threads = 1;
  bool json = false;
};

int roundtrip_command(const RoundtripOptions& o, std::ostream& out) {
  const Protocol protocol = parse_protocol(o.protocol);
  const ChannelConfig channel{o.noise, o.seed};
  const auto distribution =
      o.message == 0 ? MessageDistribution::uniform() : MessageDistribution::fixed(o.message);
  const TrialReport report = run_trials(protocol, o.trials, channel, distribution, o.threads);
  const bool ok = o.noise > 0.0 || report.successes == report.trials;
  if (o.json) {
    out << to_json(report) << '\n';
  } else {
    out << "protocol                    " << to_string(report.protocol) << '\n'
        << "trials                      " << report.trials << '\n'
        << "successes                   " << report.successes << '\n'
        << "success_rate                " << num(report.success_rate) << '\n'
        << "bits_per_transmitted_qubit  " << num(report.bits_per_transmitted_qubit) << '\n'
        << "seed                        " << report.seed << '\n'
        << "pauli_error_prob            " << num(o.noise) << '\n'
        << "messages_histogram\n";
    for (std::size_t m = 0; m < report.messages_histogram.size(); ++m) {
      const int message = static_cast<int>(m) + 1;
      out << "  " << message << " (" << message_bits(protocol, message) << ")  "
          << report.messages_histogram[m] << '\n';
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// capacity

int capacity_command(bool as_json, std::ostream& out) {
  const auto rows = capacity_summary();
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"protocol", to_string(r.protocol)},
                   {"message_count", r.message_count},
                   {"qubits_transmitted", r.qubits_transmitted},
                   {"total_bits", r.total_bits},
                   {"bits_per_qubit", r.bits_per_qubit}});
    }
    print_json(out, j);
  } else {
    out << std::left << std::setw(10) << "protocol" << std::setw(10) << "messages"
        << std::setw(20) << "qubits_transmitted" << std::setw(12) << "total_bits"
        << "bits_per_qubit\n";
    for (const auto& r : rows) {
      out << std::setw(10) << to_string(r.protocol) << std::setw(10) << r.message_count
          << std::setw(20) << r.qubits_transmitted << std::setw(12) << r.total_bits
          << std::fixed << std::setprecision(1) << r.bits_per_qubit << std::defaultfloat
          << std::setprecision(6) << '\n';
    }
    out << std::right;
  }
  return kExitOk;
}

}  // namespace

int parse_basis_index(std::string_view text) {
  std::string_view digits = text;
  for (std::string_view prefix : {"psi", "phi", "bell"}) {
    if (digits.substr(0, prefix.size()) == prefix) {
      digits.remove_prefix(prefix.size());
      break;
    }
  }
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("bad basis index '" + std::string(text) + "'");
  }
  return std::stoi(std::string(digits));
}

std::string to_json(const TrialReport& r) {
  json j = {{"protocol", to_string(r.protocol)},
            {"trials", r.trials},
            {"successes", r.successes},
            {"success_rate", r.success_rate},
            {"messages_histogram", r.messages_histogram},
            {"bits_per_transmitted_qubit", r.bits_per_transmitted_qubit},
            {"seed", r.seed}};
  return j.dump();
}

TrialReport trial_report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    TrialReport r;
    r.protocol = parse_protocol(j.at("protocol").get<std::string>());
    r.trials = j.at("trials").get<std::int64_t>();
    r.successes = j.at("successes").get<std::int64_t>();
    r.success_rate = j.at("success_rate").get<double>();
    r.messages_histogram = j.at("messages_histogram").get<std::vector<std::int64_t>>();
    r.bits_per_transmitted_qubit = j.at("bits_per_transmitted_qubit").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad trial report JSON: ") + e.what());
  }
}

std::string to_json(const ReachabilityMatrix& m) {
  json j = {{"basis", m.basis}, {"qubit", m.qubit}, {"reachable", m.reachable}};
  return j.dump();
}

ReachabilityMatrix reachability_matrix_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    ReachabilityMatrix m;
    m.basis = j.at("basis").get<std::string>();
    m.qubit = j.at("qubit").get<int>();
    m.reachable = j.at("reachable").get<std::vector<std::vector<bool>>>();
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad reachability JSON: ") + e.what());
  }
}

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-qubit GHZ dense coding simulator", "densecode"};
  app.require_subcommand(1, 1);
  std::function<int()> action;

  BasesOptions bases;
  auto* bases_cmd = app.add_subcommand("bases", "Bell, GHZ and phi bases");
  bases_cmd->require_subcommand(1, 1);
  auto* verify_cmd = bases_cmd->add_subcommand("verify", "check orthonormality and completeness");
  verify_cmd->add_option("--basis", bases.basis, "bell | ghz | phi")
      ->check(CLI::IsMember({"bell", "ghz", "phi"}));
  verify_cmd->add_flag("--json", bases.json, "emit JSON");
  verify_cmd->callback([&] { action = [&] { return bases_verify(bases, out); }; });
  auto* dump_cmd = bases_cmd->add_subcommand("dump", "print one basis state in text format");
  dump_cmd->add_option("--basis", bases.basis, "bell | ghz | phi")
      ->check(CLI::IsMember({"bell", "ghz", "phi"}));
  dump_cmd->add_option("--index", bases.index, "1-based index, e.g. 3 or psi3")->required();
  dump_cmd->callback([&] { action = [&] { return bases_dump(bases, out); }; });

  EncodeOptions enc;
  auto* encode_cmd = app.add_subcommand("encode", "apply a GHZ encoder to psi_1");
  encode_cmd->add_option("--message", enc.message, "message 1..8")
      ->required()
      ->check(CLI::Range(1, 8));
  encode_cmd->add_flag("--json", enc.json, "emit JSON");
  encode_cmd->callback([&] { action = [&] { return encode_command(enc, out); }; });

  ReachOptions reach;
  auto* reach_cmd = app.add_subcommand("reach", "single-qubit reachability matrix");
  reach_cmd->add_option("--basis", reach.basis, "bell | ghz | phi")
      ->check(CLI::IsMember({"bell", "ghz", "phi"}));
  reach_cmd->add_option("--qubit", reach.qubit, "qubit the unitary acts on");
  reach_cmd->add_flag("--oracle", reach.oracle, "cross-check with random unitaries");
  reach_cmd->add_option("--samples", reach.samples, "oracle samples per pair")
      ->check(CLI::PositiveNumber);
  reach_cmd->add_option("--seed", reach.seed, "oracle seed");
  reach_cmd->add_flag("--json", reach.json, "emit JSON");
  reach_cmd->callback([&] { action = [&] { return reach_command(reach, out); }; });

  NetworkOptions net;
  auto* network_cmd = app.add_subcommand("network", "GHZ disentangling network");
  network_cmd->require_subcommand(1, 1);
  auto* show_cmd = network_cmd->add_subcommand("show", "gate list and truth table");
  show_cmd->add_flag("--json", net.json, "emit JSON");
  show_cmd->callback([&] { action = [&] { return network_show(net, out); }; });
  auto* apply_cmd = network_cmd->add_subcommand("apply", "run the network on a state file");
  apply_cmd->add_option("--state-file", net.state_file, "state in text format")->required();
  apply_cmd->add_flag("--json", net.json, "emit JSON");
  apply_cmd->callback([&] { action = [&] { return network_apply(net, out); }; });

  RoundtripOptions rt;
  auto* rt_cmd = app.add_subcommand("roundtrip", "run dense-coding trials");
  rt_cmd->add_option("--protocol", rt.protocol, "ghz3 | bell2")
      ->check(CLI::IsMember({"ghz3", "bell2"}));
  rt_cmd->add_option("--trials", rt.trials, "number of trials")->check(CLI::PositiveNumber);
  rt_cmd->add_option("--seed", rt.seed, "master seed");
  rt_cmd->add_option("--noise", rt.noise, "Pauli error probability per transmitted qubit")
      ->check(CLI::Range(0.0, 1.0));
  rt_cmd->add_option("--message", rt.message, "send only this message")
      ->check(CLI::Range(1, 8));
  rt_cmd->add_option("--threads", rt.threads, "worker threads")->check(CLI::PositiveNumber);
  rt_cmd->add_flag("--json", rt.json, "emit JSON");
  rt_cmd->callback([&] { action = [&] { return roundtrip_command(rt, out); }; });

  bool capacity_json = false;
  auto* cap_cmd = app.add_subcommand("capacity", "bits per transmitted qubit");
  cap_cmd->add_flag("--json", capacity_json, "emit JSON");
  cap_cmd->callback([&] { action = [&] { return capacity_command(capacity_json, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "densecode: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace densecode::cli
