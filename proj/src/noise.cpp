#include "coherence/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "coherence/rng.hpp"
#include "coherence/statevec.hpp"

namespace coherence {

namespace {

void check_probability(double p, const char* name) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::invalid_argument(std::string("noise probability ") + name + " outside [0, 1]");
  }
}

struct PauliEvent {
  std::size_t after_gate;
  int qubit;
  int pauli;  // 0 = X, 1 = Y, 2 = Z
};

Gate pauli_gate(int pauli, int qubit) {
  switch (pauli) {
    case 0: return Gate::x(qubit);
    case 1: return Gate::y(qubit);
    default: return Gate::z(qubit);
  }
}

}  // namespace

void NoiseProfile::validate() const {
  check_probability(p_1q, "p_1q");
  check_probability(p_2q, "p_2q");
  check_probability(p_readout, "p_readout");
}

Distribution noisy_sample(const Circuit& circuit, const NoiseProfile& profile, std::uint64_t shots) {
  profile.validate();
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");

  const auto& gates = circuit.gates();
  const int n = circuit.num_qubits();
  const std::vector<double> ideal_cdf = cumulative_probabilities(run_circuit(circuit));

  std::map<std::uint64_t, std::uint64_t> counts;
  std::vector<PauliEvent> events;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    Rng rng(profile.seed, shot);

    events.clear();
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
      const double p = gates[gi].arity() == 1 ? profile.p_1q : profile.p_2q;
      if (p > 0.0 && rng.bernoulli(p)) {
        const auto qubits = gates[gi].qubits();
        const int q = qubits[rng.below(qubits.size())];
        events.push_back({gi, q, static_cast<int>(rng.below(3))});
      }
    }

    std::uint64_t outcome;
    if (events.empty()) {
      outcome = draw_outcome(ideal_cdf, rng);
    } else {
      StateVector state = StateVector::zero(n);
      auto ev = events.begin();
      for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        state.apply(gates[gi]);
        for (; ev != events.end() && ev->after_gate == gi; ++ev) state.apply(pauli_gate(ev->pauli, ev->qubit));
      }
      outcome = draw_outcome(cumulative_probabilities(state), rng);
    }

    if (profile.p_readout > 0.0) {
      for (int q = 0; q < n; ++q)
        if (rng.bernoulli(profile.p_readout)) outcome ^= std::uint64_t{1} << q;
    }
    ++counts[outcome];
  }
  return Distribution::from_counts(n, counts);
}

}  // namespace coherence
