#pragma once

#include <cstdint>

#include "coherence/circuit.hpp"
#include "coherence/distribution.hpp"

namespace coherence {

/// Per-gate Pauli error and per-qubit readout flip probabilities.
struct NoiseProfile {
  double p_1q = 0.0;
  double p_2q = 0.0;  // applies to every gate acting on two or more qubits
  double p_readout = 0.0;
  std::uint64_t seed = 0;

  static NoiseProfile noiseless(std::uint64_t seed = 0) { return {0.0, 0.0, 0.0, seed}; }

  /// Throws std::invalid_argument unless every probability is in [0, 1].
  void validate() const;
  bool is_noiseless() const { return p_1q == 0.0 && p_2q == 0.0 && p_readout == 0.0; }
};

/// Monte Carlo trajectory sampling from |0...0>.
///
/// After each gate, with probability p_1q (single-qubit gate) or p_2q
/// (otherwise), one uniformly chosen qubit of that gate receives a uniformly
/// chosen X, Y or Z. The final state is measured once and each read bit is
/// flipped independently with p_readout. Shot k draws from stream
/// (profile.seed, k), so results do not depend on evaluation order.
Distribution noisy_sample(const Circuit& circuit, const NoiseProfile& profile, std::uint64_t shots);

}  // namespace coherence
