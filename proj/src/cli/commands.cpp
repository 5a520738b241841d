#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "coherence/circuit_json.hpp"
#include "coherence/cli.hpp"
#include "coherence/cost_model.hpp"
#include "coherence/counts_io.hpp"
#include "coherence/logic_ops.hpp"
#include "coherence/metrics.hpp"
#include "coherence/statevec.hpp"
#include "report_util.hpp"

namespace coherence::cli {

namespace {

constexpr const char* kBitOrder = "highest qubit index leftmost";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

Json noise_json(const NoiseProfile& p) {
  return {{"p_1q", p.p_1q}, {"p_2q", p.p_2q}, {"p_readout", p.p_readout}};
}

Json distribution_json(const Distribution& d) {
  Json j = Json::object();
  for (const auto& [x, v] : d.entries()) {
    if (d.is_counts()) {
      if (v > 0) j[to_bitstring(x, d.width())] = static_cast<std::uint64_t>(v);
    } else {
      j[to_bitstring(x, d.width())] = v;
    }
  }
  return j;
}

Json outcome_set_json(const OutcomeSet& set, int width) {
  Json j = Json::array();
  for (auto x : set) j.push_back(to_bitstring(x, width));
  return j;
}

Circuit select_circuit(const SimulateConfig& c) {
  if (c.circuit == "liar-reference") return build_liar_reference();
  if (c.circuit == "liar-literal") return build_liar_literal();
  if (c.circuit == "general") {
    if (c.pairs < 1) throw std::invalid_argument("general circuit needs --pairs >= 1");
    return build_general(PairLayout::standard(c.pairs), {c.mode, c.with_phase});
  }
  if (c.circuit == "file") {
    if (!c.circuit_file) throw std::invalid_argument("circuit 'file' needs --circuit PATH");
    return load_circuit(*c.circuit_file);
  }
  throw std::invalid_argument("unknown circuit '" + c.circuit +
                              "' (expected liar-reference, liar-literal, general or file)");
}

std::string fmt_double(double v, int precision = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

}  // namespace

NoiseProfile parse_noise(const std::string& text, std::uint64_t seed) {
  const auto parts = split(text);
  if (parts.size() != 3) throw std::invalid_argument("--noise expects p1q,p2q,pread");
  NoiseProfile p;
  try {
    p.p_1q = std::stod(parts[0]);
    p.p_2q = std::stod(parts[1]);
    p.p_readout = std::stod(parts[2]);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--noise values must be numbers: '" + text + "'");
  }
  p.seed = seed;
  p.validate();
  return p;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text)) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(part, &pos);
    } catch (const std::logic_error&) {
      pos = 0;
    }
    if (part.empty() || pos != part.size()) throw std::invalid_argument("invalid integer '" + part + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> parse_label_list(const std::string& text) {
  auto parts = split(text);
  std::erase_if(parts, [](const std::string& s) { return s.empty(); });
  return parts;
}

// ---- simulate -------------------------------------------------------------

int cmd_simulate(const SimulateConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Circuit circuit = select_circuit(config);
    if (config.shots && *config.shots < 1) throw std::invalid_argument("--shots must be at least 1");
    std::optional<NoiseProfile> noise;
    if (config.noise) noise = parse_noise(*config.noise, config.seed);
    if (noise && !config.shots) throw std::invalid_argument("--noise requires --shots");

    const StateVector final_state = run_circuit(circuit);
    const Distribution probs = probabilities(final_state);
    std::optional<Distribution> counts;
    if (config.shots) {
      counts = noise ? noisy_sample(circuit, *noise, *config.shots)
                     : sample_counts(final_state, *config.shots, config.seed);
    }

    Json cfg = {{"circuit", config.circuit},
                {"pairs", config.pairs},
                {"mode", std::string(to_string(config.mode))},
                {"with_phase", config.with_phase},
                {"shots", config.shots ? Json(*config.shots) : Json(nullptr)},
                {"seed", config.seed},
                {"noise", noise ? noise_json(*noise) : Json(nullptr)}};
    Json inputs = Json::object();
    if (config.circuit_file) {
      cfg["circuit_file"] = config.circuit_file->string();
      inputs[config.circuit_file->string()] = sha256_file(*config.circuit_file);
    }

    Json report = {{"schema", "coherence/simulate-report/v1"},
                   {"command", "simulate"},
                   {"config", cfg},
                   {"seed", config.seed},
                   {"inputs", inputs},
                   {"num_qubits", circuit.num_qubits()},
                   {"bit_order", kBitOrder},
                   {"gate_count", circuit.size()},
                   {"probabilities", distribution_json(probs)}};
    if (counts) report["counts"] = distribution_json(*counts);

    if (config.counts_out) {
      if (!counts) throw std::invalid_argument("--counts-out requires --shots");
      std::ostringstream csv;
      write_counts_csv(csv, *counts);
      emit(csv.str(), config.counts_out, out);
    }
    if (config.circuit_out) emit(circuit_to_json(circuit).dump(2) + "\n", config.circuit_out, out);

    if (config.pretty) {
      std::ostringstream os;
      os << "circuit " << config.circuit << " (" << circuit.num_qubits() << " qubits, "
         << circuit.size() << " gates), bit order: " << kBitOrder << "\n";
      os << "state        probability" << (counts ? "   counts" : "") << "\n";
      for (const auto& [x, p] : probs.entries()) {
        os << std::left << std::setw(12) << to_bitstring(x, probs.width()) << ' ' << fmt_double(p, 12);
        if (counts) os << "   " << static_cast<std::uint64_t>(counts->raw(x));
        os << "\n";
      }
      if (config.out) emit(dump(report), config.out, out);
      out << os.str();
    } else {
      emit(dump(report), config.out, out);
    }
    return kOk;
  });
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.pairs < 1 || config.pairs > kMaxDensePairs) {
      throw std::invalid_argument("verify supports --pairs 1.." + std::to_string(kMaxDensePairs) +
                                  " (dense operators are capped at dimension 1024)");
    }
    const IdentitySuite suite = run_identity_suite(config.pairs);

    Json checks = Json::array();
    for (const auto& c : suite.checks) {
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"max_deviation", c.max_deviation},
                        {"tolerance", c.tolerance},
                        {"informational", c.informational},
                        {"detail", c.detail}});
    }
    const int m = config.pairs;
    auto bits = [](const std::vector<int>& v) {
      std::string s;
      for (int b : v) s += static_cast<char>('0' + b);
      return s;
    };
    Json divergences = Json::array();
    for (const auto& d : suite.divergences) {
      divergences.push_back({{"c", bits(d.contradictions)},
                             {"r", bits(d.resolutions)},
                             {"violations", d.violations},
                             {"flag_or", d.flag_or},
                             {"flag_parity", d.flag_parity}});
    }
    const auto& fp = suite.fixed_points;
    const int width = 2 * m + 1;
    Json fixed_not_claimed = Json::array();
    for (auto x : fp.fixed_not_claimed) fixed_not_claimed.push_back(to_bitstring(x, width));
    Json claimed_not_fixed = Json::array();
    for (auto x : fp.claimed_not_fixed) claimed_not_fixed.push_back(to_bitstring(x, width));

    Json report = {
        {"schema", "coherence/verify-report/v1"},
        {"command", "verify"},
        {"config", {{"pairs", m}}},
        {"seed", nullptr},
        {"inputs", Json::object()},
        {"all_passed", suite.all_passed()},
        {"max_deviation", suite.max_deviation()},
        {"checks", checks},
        {"fixed_points",
         {{"reflection_plus_dimension", fp.reflection_plus_dimension},
          {"kernel_dimension", fp.kernel_dimension},
          {"basis_sets_equal", fp.basis_sets_equal},
          {"eigenspace_deviation", fp.eigenspace_deviation},
          {"cascade_bit_order", "flag is the leftmost bit, then resolutions, then contradictions"},
          {"cascade_fixed_dimension", fp.cascade_fixed_dimension},
          {"claimed_dimension", fp.claimed_dimension},
          {"fixed_not_claimed", fixed_not_claimed},
          {"claimed_not_fixed", claimed_not_fixed}}},
        {"parity_vs_or_divergences", divergences}};

    if (config.pretty) {
      std::ostringstream os;
      os << "identity suite, " << m << " pair(s)\n";
      for (const auto& c : suite.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(44) << c.name << " dev="
           << std::scientific << std::setprecision(2) << c.max_deviation << std::defaultfloat
           << (c.informational ? "  [documented divergence]" : "") << "\n";
        if (!c.detail.empty()) os << "     " << c.detail << "\n";
      }
      os << (suite.all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
      if (config.out) emit(dump(report), config.out, out);
      out << os.str();
    } else {
      emit(dump(report), config.out, out);
    }
    return suite.all_passed() ? kOk : kVerificationFailed;
  });
}

// ---- metrics --------------------------------------------------------------

int cmd_metrics(const MetricsCommandConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Distribution exp = read_distribution_csv(config.experimental);
    const Distribution ideal = read_distribution_csv(config.ideal);
    if (exp.width() != ideal.width()) {
      throw std::invalid_argument("experimental and ideal widths differ");
    }
    MetricsConfig mc;
    mc.consistent_set = parse_outcome_set(parse_label_list(config.consistent_set), exp.width());
    if (config.paradox_set) {
      mc.paradox_set = parse_outcome_set(parse_label_list(*config.paradox_set), exp.width());
    }
    mc.flag_index = config.flag_index;
    MetricsReport r = full_report(exp, ideal, mc);

    Json chi2 = nullptr;
    if (r.chi2) {
      chi2 = {{"statistic", r.chi2->statistic},
              {"dof", r.chi2->dof},
              {"p_value", r.chi2->p_value},
              {"bins", r.chi2->bins},
              {"pooled_bins", r.chi2->pooled_bins},
              {"min_expected_count", kMinExpectedCount}};
    }
    Json report = {
        {"schema", "coherence/metrics-report/v1"},
        {"command", "metrics"},
        {"config",
         {{"experimental", config.experimental.string()},
          {"ideal", config.ideal.string()},
          {"consistent_set", outcome_set_json(r.consistent_set, r.width)},
          {"paradox_set", outcome_set_json(r.paradox_set, r.width)},
          {"flag_index", r.flag_index}}},
        {"seed", config.seed},
        {"inputs",
         {{config.experimental.string(), sha256_file(config.experimental)},
          {config.ideal.string(), sha256_file(config.ideal)}}},
        {"bit_order", kBitOrder},
        {"width", r.width},
        {"f_c_experimental", r.f_c_experimental},
        {"f_c_reference", r.f_c_reference},
        {"d_tv", r.d_tv},
        {"r_i", r.r_i ? Json(*r.r_i) : Json("undefined")},
        {"chi2", chi2},
        {"z_flag", r.z_flag},
        {"experimental_unassigned_mass", r.experimental_unassigned_mass},
        {"reference_unassigned_mass", r.reference_unassigned_mass}};

    if (config.pretty) {
      std::ostringstream os;
      os << "F_C (experimental)   " << fmt_double(r.f_c_experimental) << "\n"
         << "F_C (reference)      " << fmt_double(r.f_c_reference) << "\n"
         << "D_TV                 " << fmt_double(r.d_tv) << "\n"
         << "R_I                  " << (r.r_i ? fmt_double(*r.r_i) : std::string("undefined")) << "\n";
      if (r.chi2) {
        os << "chi2                 " << fmt_double(r.chi2->statistic, 3) << " (dof " << r.chi2->dof
           << ", p = " << fmt_double(r.chi2->p_value, 6) << ")\n";
      }
      os << "<Z_f> (q" << r.flag_index << ")           " << fmt_double(r.z_flag) << "\n";
      if (config.out) emit(dump(report), config.out, out);
      out << os.str();
    } else {
      emit(dump(report), config.out, out);
    }
    return kOk;
  });
}

// ---- estimate -------------------------------------------------------------

int cmd_estimate(const EstimateConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.n < 2 || config.n % 2 != 0) {
      throw std::invalid_argument("--n must be an even number >= 2, got " + std::to_string(config.n));
    }
    const NoiseProfile profile = parse_noise(config.noise, config.seed);
    const int pairs = config.n / 2;
    const Circuit circuit = build_general(PairLayout::standard(pairs), {config.mode, config.with_phase});

    Json inputs = Json::object();
    std::optional<CouplingGraph> graph;
    if (config.graph == "linear") {
      graph = CouplingGraph::linear(circuit.num_qubits());
    } else if (config.graph == "ring") {
      graph = CouplingGraph::ring(circuit.num_qubits());
    } else {
      graph = load_graph(config.graph);
      inputs[config.graph] = sha256_file(config.graph);
    }
    const std::vector<int> layout =
        config.layout ? parse_int_list(*config.layout) : identity_layout(circuit.num_qubits());

    const GateCensus logical = gate_census(circuit, false);
    const CostEstimate est = routing_estimate(circuit, *graph, layout, profile);

    Json report = {
        {"schema", "coherence/estimate-report/v1"},
        {"command", "estimate"},
        {"config",
         {{"n", config.n},
          {"pairs", pairs},
          {"mode", std::string(to_string(config.mode))},
          {"with_phase", config.with_phase},
          {"noise", noise_json(profile)},
          {"graph", config.graph},
          {"layout", layout}}},
        {"seed", config.seed},
        {"inputs", inputs},
        {"num_qubits", circuit.num_qubits()},
        {"graph",
         {{"num_physical", graph->num_physical()},
          {"edges", graph->edges().size()},
          {"max_degree", graph->max_degree()},
          {"connected", graph->is_connected()}}},
        {"census",
         {{"count_1q", logical.count_1q},
          {"count_2q", logical.count_2q},
          {"count_ccx", logical.count_ccx},
          {"count_mcx", logical.count_mcx},
          {"depth", logical.depth}}},
        {"g_2q", est.g_2q},
        {"g_1q", est.g_1q},
        {"depth", est.depth},
        {"g_2q_toffoli", est.g_2q_toffoli},
        {"unexpanded_mcx", est.unexpanded_mcx},
        {"interactions", est.interactions},
        {"swap_count", est.swap_count},
        {"swap_overhead_depth", est.swap_overhead_depth},
        {"mean_distance", est.mean_distance},
        {"fidelity_logical", est.fidelity_logical},
        {"fidelity_estimate", est.fidelity_estimate}};

    if (config.pretty) {
      std::ostringstream os;
      os << "N = " << config.n << " (" << pairs << " pairs, " << circuit.num_qubits() << " qubits)\n"
         << "two-qubit gates from Toffolis   " << est.g_2q_toffoli << "\n"
         << "two-qubit gates incl. routing   " << est.g_2q << "\n"
         << "single-qubit gates              " << est.g_1q << "\n"
         << "depth incl. routing             " << est.depth << "\n"
         << "mean interaction distance       " << fmt_double(est.mean_distance, 3) << "\n"
         << "SWAP overhead (CNOTs)           " << est.swap_overhead_depth << "\n"
         << "fidelity (logical circuit)      " << fmt_double(est.fidelity_logical) << "\n"
         << "fidelity (with routing)         " << fmt_double(est.fidelity_estimate) << "\n";
      if (config.out) emit(dump(report), config.out, out);
      out << os.str();
    } else {
      emit(dump(report), config.out, out);
    }
    return kOk;
  });
}

// ---- truthtable -----------------------------------------------------------

int cmd_truthtable(const TruthTableConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    constexpr int kMaxPairs = 6;
    if (config.pairs < 1 || config.pairs > kMaxPairs) {
      throw std::invalid_argument("truthtable supports --pairs 1.." + std::to_string(kMaxPairs));
    }
    if (config.flag_in != 0 && config.flag_in != 1) throw std::invalid_argument("--flag-in must be 0 or 1");

    const int m = config.pairs;
    const PairLayout layout = PairLayout::standard(m);
    const Circuit parity = build_general(layout, {CascadeMode::parity});

    std::ostringstream os;
    if (config.pretty) {
      os << std::left << std::setw(m + 4) << "c" << std::setw(m + 4) << "r" << std::setw(12)
         << "violations" << std::setw(10) << "flag_out" << std::setw(26) << "classification"
         << std::setw(13) << "parity_flag" << "diverges\n";
    } else {
      os << "# truthtable pairs=" << m << " flag_in=" << config.flag_in
         << " (c and r list pair 1..M left to right)\n";
      os << "c,r,violations,flag_out,classification,parity_flag,diverges\n";
    }
    const std::uint64_t rows = std::uint64_t{1} << (2 * m);
    for (std::uint64_t x = 0; x < rows; ++x) {
      ClassicalAssignment a;
      // Row order: c varies slowest, then r, both read left to right.
      for (int i = 0; i < m; ++i) {
        a.contradictions.push_back(static_cast<int>((x >> (2 * m - 1 - i)) & 1U));
        a.resolutions.push_back(static_cast<int>((x >> (m - 1 - i)) & 1U));
      }
      a.flag_in = config.flag_in;
      const ClassicalResult r = classical_rule(a);
      const int parity_flag = circuit_flag_output(parity, layout, a);
      std::string c_str, r_str;
      for (int i = 0; i < m; ++i) {
        c_str += static_cast<char>('0' + a.contradictions[static_cast<std::size_t>(i)]);
        r_str += static_cast<char>('0' + a.resolutions[static_cast<std::size_t>(i)]);
      }
      const bool diverges = parity_flag != r.flag_out;
      if (config.pretty) {
        os << std::left << std::setw(m + 4) << c_str << std::setw(m + 4) << r_str << std::setw(12)
           << r.violations << std::setw(10) << r.flag_out << std::setw(26) << to_string(r.classification)
           << std::setw(13) << parity_flag << (diverges ? "yes" : "no") << "\n";
      } else {
        os << c_str << ',' << r_str << ',' << r.violations << ',' << r.flag_out << ','
           << to_string(r.classification) << ',' << parity_flag << ',' << (diverges ? 1 : 0) << "\n";
      }
    }
    emit(os.str(), config.out, out);
    return kOk;
  });
}

}  // namespace coherence::cli
