#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coherence/cli.hpp"

using namespace coherence;
using namespace coherence::cli;

int main(int argc, char** argv) {
  CLI::App app{"coherence: flag-qubit consistency circuits, operator checks and metrics"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  bool pretty = false;
  std::optional<std::string> out;
  std::string mode = "parity";
  bool with_phase = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed")->capture_default_str();
    sub->add_flag("--pretty", pretty, "Human-readable rendering");
    sub->add_option("--out", out, "Write primary output to this file");
  };

  // simulate
  SimulateConfig sim;
  std::optional<std::string> circuit_file, counts_out, circuit_out;
  std::optional<std::string> sim_noise;
  auto* simulate = app.add_subcommand("simulate", "Exact statevector run with optional seeded sampling");
  simulate->add_option("selector", sim.circuit, "liar-reference | liar-literal | general | file")
      ->capture_default_str();
  simulate->add_option("--pairs", sim.pairs, "Contradiction/resolution pairs for 'general'");
  simulate->add_option("--mode", mode, "Cascade mode")->check(CLI::IsMember({"parity", "or"}));
  simulate->add_flag("--with-phase", with_phase, "Append controlled phases on the resolution qubits");
  simulate->add_option("--shots", sim.shots, "Number of sampled shots");
  simulate->add_option("--noise", sim_noise, "p1q,p2q,pread");
  simulate->add_option("--circuit", circuit_file, "Circuit JSON for 'file'");
  simulate->add_option("--counts-out", counts_out, "Write sampled counts CSV");
  simulate->add_option("--circuit-out", circuit_out, "Write the circuit as JSON");
  add_common(simulate);

  // verify
  VerifyConfig ver;
  auto* verify = app.add_subcommand("verify", "Run the operator identity suite");
  verify->add_option("--pairs", ver.pairs, "Number of pairs (1..5)")->capture_default_str();
  add_common(verify);

  // metrics
  MetricsCommandConfig met;
  std::string experimental, ideal;
  auto* metrics = app.add_subcommand("metrics", "Compare an experimental distribution with a reference");
  metrics->add_option("--experimental", experimental, "Counts or probability CSV")->required();
  metrics->add_option("--ideal", ideal, "Reference counts or probability CSV")->required();
  metrics->add_option("--consistent-set", met.consistent_set, "Comma-separated bitstrings")
      ->capture_default_str();
  metrics->add_option("--paradox-set", met.paradox_set, "Comma-separated bitstrings");
  metrics->add_option("--flag-index", met.flag_index, "Flag qubit index")->capture_default_str();
  add_common(metrics);

  // estimate
  EstimateConfig est;
  auto* estimate = app.add_subcommand("estimate", "Gate census, routing overhead and fidelity estimate");
  estimate->add_option("--n", est.n, "Even number of statement qubits")->capture_default_str();
  estimate->add_option("--mode", mode, "Cascade mode")->check(CLI::IsMember({"parity", "or"}));
  estimate->add_flag("--with-phase", with_phase, "Append controlled phases on the resolution qubits");
  estimate->add_option("--noise", est.noise, "p1q,p2q,pread")->capture_default_str();
  estimate->add_option("--graph", est.graph, "linear | ring | edge-list file")->capture_default_str();
  estimate->add_option("--layout", est.layout, "Logical-to-physical map, comma separated");
  add_common(estimate);

  // truthtable
  TruthTableConfig tt;
  auto* truthtable = app.add_subcommand("truthtable", "Enumerate classical assignments");
  truthtable->add_option("--pairs", tt.pairs, "Number of pairs (1..6)")->capture_default_str();
  truthtable->add_option("--flag-in", tt.flag_in, "Initial flag value")->capture_default_str();
  add_common(truthtable);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto path = [](const std::optional<std::string>& s) -> std::optional<std::filesystem::path> {
    if (!s) return std::nullopt;
    return std::filesystem::path(*s);
  };

  if (simulate->parsed()) {
    sim.mode = parse_cascade_mode(mode);
    sim.with_phase = with_phase;
    sim.seed = seed;
    sim.noise = sim_noise;
    sim.circuit_file = path(circuit_file);
    sim.counts_out = path(counts_out);
    sim.circuit_out = path(circuit_out);
    sim.out = path(out);
    sim.pretty = pretty;
    return cmd_simulate(sim, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    ver.out = path(out);
    ver.pretty = pretty;
    return cmd_verify(ver, std::cout, std::cerr);
  }
  if (metrics->parsed()) {
    met.experimental = experimental;
    met.ideal = ideal;
    met.seed = seed;
    met.out = path(out);
    met.pretty = pretty;
    return cmd_metrics(met, std::cout, std::cerr);
  }
  if (estimate->parsed()) {
    est.mode = parse_cascade_mode(mode);
    est.with_phase = with_phase;
    est.seed = seed;
    est.out = path(out);
    est.pretty = pretty;
    return cmd_estimate(est, std::cout, std::cerr);
  }
  tt.out = path(out);
  tt.pretty = pretty;
  return cmd_truthtable(tt, std::cout, std::cerr);
}
