#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "coherence/circuit.hpp"
#include "coherence/distribution.hpp"
#include "coherence/rng.hpp"

namespace coherence {

using Amplitude = std::complex<double>;

/// Probabilities below this are reported as exactly zero.
inline constexpr double kProbabilityFloor = 1e-12;

/// Dense amplitude vector over 2^n basis states. Index bit k is qubit k.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;

  /// |0...0> on `num_qubits` qubits.
  static StateVector zero(int num_qubits);
  /// Computational basis state |index>.
  static StateVector basis(int num_qubits, std::uint64_t index);
  /// Takes ownership of `amplitudes`; size must be 2^num_qubits and the
  /// vector normalized within 1e-9.
  static StateVector from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude amplitude(std::uint64_t index) const { return amplitudes_.at(index); }
  double norm_squared() const;

  /// Applies `gate` in place.
  void apply(const Gate& gate);

 private:
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

StateVector init_zero(int num_qubits);
StateVector apply_gate(StateVector state, const Gate& gate);
StateVector run_circuit(const Circuit& circuit, StateVector initial);
inline StateVector run_circuit(const Circuit& circuit) {
  return run_circuit(circuit, StateVector::zero(circuit.num_qubits()));
}

/// Born-rule distribution. Outcomes below kProbabilityFloor are dropped.
Distribution probabilities(const StateVector& state);

/// Multinomial shot sample, reproducible for a given seed.
Distribution sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// P(qubit = 0) - P(qubit = 1).
double z_expectation(const StateVector& state, int qubit);

/// Running sums of |amplitude|^2 in index order.
std::vector<double> cumulative_probabilities(const StateVector& state);

/// Inverse-CDF draw from `cdf` (as returned by cumulative_probabilities).
std::uint64_t draw_outcome(std::span<const double> cdf, Rng& rng);

}  // namespace coherence
