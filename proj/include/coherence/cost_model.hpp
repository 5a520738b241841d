#pragma once

#include <vector>

#include "coherence/circuit.hpp"
#include "coherence/coupling_graph.hpp"
#include "coherence/noise.hpp"

namespace coherence {

/// exp(-(p_2q * g_2q + p_1q * g_1q)).
double fidelity_estimate(long g_2q, long g_1q, const NoiseProfile& profile);

struct CostEstimate {
  long g_2q = 0;  // decomposed two-qubit gates plus SWAP overhead in CNOTs
  long g_1q = 0;
  long depth = 0;
  long g_2q_toffoli = 0;  // CNOTs coming from Toffoli expansions
  long unexpanded_mcx = 0;
  long interactions = 0;  // two-qubit interactions routed
  long swap_count = 0;    // sum over interactions of (d - 1)
  long swap_overhead_depth = 0;  // 2 * 3 * swap_count
  double mean_distance = 0.0;
  /// Fidelity of the logical circuit without routing overhead.
  double fidelity_logical = 1.0;
  /// Fidelity including routing overhead; equals fidelity_estimate(g_2q, g_1q).
  double fidelity_estimate = 1.0;
};

/// Routing and cost estimate of `circuit` under a logical-to-physical
/// `layout` (layout[q] = physical index of logical qubit q).
///
/// Every CNOT/CP (Toffolis expanded first) at graph distance d costs d - 1
/// SWAPs of 3 CNOTs each, doubled for moving the qubit there and back.
/// Multi-controlled gates with more than two controls are not expanded;
/// their control-target pairs are routed but add no gate count.
CostEstimate routing_estimate(const Circuit& circuit, const CouplingGraph& graph,
                              const std::vector<int>& layout, const NoiseProfile& profile);

/// layout[q] = q.
std::vector<int> identity_layout(int num_qubits);

}  // namespace coherence
