#include "coherence/cost_model.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace coherence {

double fidelity_estimate(long g_2q, long g_1q, const NoiseProfile& profile) {
  profile.validate();
  if (g_2q < 0 || g_1q < 0) throw std::invalid_argument("gate counts must be nonnegative");
  return std::exp(-(profile.p_2q * static_cast<double>(g_2q) +
                    profile.p_1q * static_cast<double>(g_1q)));
}

std::vector<int> identity_layout(int num_qubits) {
  std::vector<int> layout(static_cast<std::size_t>(num_qubits));
  for (int i = 0; i < num_qubits; ++i) layout[static_cast<std::size_t>(i)] = i;
  return layout;
}

CostEstimate routing_estimate(const Circuit& circuit, const CouplingGraph& graph,
                              const std::vector<int>& layout, const NoiseProfile& profile) {
  if (layout.size() != static_cast<std::size_t>(circuit.num_qubits())) {
    throw std::invalid_argument("layout has " + std::to_string(layout.size()) + " entries for " +
                                std::to_string(circuit.num_qubits()) + " logical qubits");
  }
  std::set<int> used;
  for (int p : layout) {
    if (p < 0 || p >= graph.num_physical()) {
      throw std::out_of_range("layout maps to physical qubit " + std::to_string(p) +
                              " outside the coupling graph");
    }
    if (!used.insert(p).second) {
      throw std::invalid_argument("layout maps two logical qubits to physical " + std::to_string(p));
    }
  }
  if (!graph.is_connected(std::vector<int>(used.begin(), used.end()))) {
    throw std::invalid_argument("used physical qubits are not connected in the coupling graph");
  }

  const GateCensus census = gate_census(circuit, /*decompose=*/true);
  CostEstimate est;
  est.g_2q_toffoli = census.count_2q_toffoli;
  est.unexpanded_mcx = census.count_mcx;

  long distance_sum = 0;
  auto route = [&](int a, int b) {
    const int d = graph.distance(layout[static_cast<std::size_t>(a)], layout[static_cast<std::size_t>(b)]);
    ++est.interactions;
    distance_sum += d;
    est.swap_count += d - 1;
  };
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::CCX) {
      for (const auto& sub : toffoli_decompose(g))
        if (sub.arity() == 2) route(sub.controls[0], sub.targets[0]);
    } else if (g.arity() >= 2) {
      for (int c : g.controls) route(c, g.targets[0]);
    }
  }

  est.swap_overhead_depth = 2 * 3 * est.swap_count;
  est.mean_distance = est.interactions ? static_cast<double>(distance_sum) / est.interactions : 0.0;
  est.g_1q = census.count_1q;
  est.g_2q = census.count_2q + est.swap_overhead_depth;
  est.depth = census.depth + est.swap_overhead_depth;
  est.fidelity_logical = fidelity_estimate(census.count_2q, census.count_1q, profile);
  est.fidelity_estimate = fidelity_estimate(est.g_2q, est.g_1q, profile);
  return est;
}

}  // namespace coherence
