#include "coherence/statevec.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coherence {

namespace {

using Matrix2 = std::array<Amplitude, 4>;  // row-major

Matrix2 single_qubit_matrix(GateKind kind) {
  using namespace std::complex_literals;
  const double s = std::numbers::sqrt2 / 2.0;
  switch (kind) {
    case GateKind::H: return {s, s, s, -s};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -1i, 1i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::Tdg: return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
    default: throw std::logic_error("not a single-qubit kind");
  }
}

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                " outside [1, " + std::to_string(StateVector::kMaxQubits) + "]");
  }
}

}  // namespace

StateVector StateVector::zero(int num_qubits) { return basis(num_qubits, 0); }

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) throw std::out_of_range("basis index outside register");
  std::vector<Amplitude> amps(dim, 0.0);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes) {
  check_qubit_count(num_qubits);
  if (amplitudes.size() != (std::uint64_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude count does not match 2^num_qubits");
  }
  StateVector s(num_qubits, std::move(amplitudes));
  if (std::abs(s.norm_squared() - 1.0) > 1e-9) {
    throw std::invalid_argument("amplitudes are not normalized");
  }
  return s;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

void StateVector::apply(const Gate& gate) {
  gate.validate(num_qubits_);

  std::uint64_t cmask = 0;
  std::uint64_t cval = 0;
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << gate.controls[i];
    cmask |= bit;
    if (gate.polarities[i] == Polarity::positive) cval |= bit;
  }
  const std::uint64_t stride = std::uint64_t{1} << gate.targets[0];
  const std::uint64_t dim = amplitudes_.size();

  if (gate.kind == GateKind::CP) {
    const Amplitude phase = std::polar(1.0, gate.angle);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & stride) && (i & cmask) == cval) amplitudes_[i] *= phase;
    }
    return;
  }

  const bool is_flip =
      gate.kind == GateKind::CNOT || gate.kind == GateKind::CCX || gate.kind == GateKind::MCX;
  const Matrix2 m = is_flip ? single_qubit_matrix(GateKind::X) : single_qubit_matrix(gate.kind);

  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t off = 0; off < stride; ++off) {
      const std::uint64_t i0 = base + off;
      if ((i0 & cmask) != cval) continue;
      const std::uint64_t i1 = i0 | stride;
      const Amplitude a0 = amplitudes_[i0];
      const Amplitude a1 = amplitudes_[i1];
      if (is_flip) {
        amplitudes_[i0] = a1;
        amplitudes_[i1] = a0;
      } else {
        amplitudes_[i0] = m[0] * a0 + m[1] * a1;
        amplitudes_[i1] = m[2] * a0 + m[3] * a1;
      }
    }
  }
}

StateVector init_zero(int num_qubits) { return StateVector::zero(num_qubits); }

StateVector apply_gate(StateVector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

StateVector run_circuit(const Circuit& circuit, StateVector initial) {
  if (circuit.num_qubits() != initial.num_qubits()) {
    throw std::invalid_argument("circuit has " + std::to_string(circuit.num_qubits()) +
                                " qubits but state has " +
                                std::to_string(initial.num_qubits()));
  }
  for (const auto& g : circuit.gates()) initial.apply(g);
  return initial;
}

Distribution probabilities(const StateVector& state) {
  std::map<std::uint64_t, double> probs;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p >= kProbabilityFloor) probs[i] = p;
  }
  return Distribution::from_probabilities(state.num_qubits(), std::move(probs));
}

std::vector<double> cumulative_probabilities(const StateVector& state) {
  std::vector<double> cdf;
  cdf.reserve(state.dimension());
  double sum = 0.0;
  for (const auto& a : state.amplitudes()) {
    sum += std::norm(a);
    cdf.push_back(sum);
  }
  return cdf;
}

std::uint64_t draw_outcome(std::span<const double> cdf, Rng& rng) {
  const double u = rng.uniform() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::uint64_t>(it - cdf.begin());
}

Distribution sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  const auto cdf = cumulative_probabilities(state);
  Rng rng(seed);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[draw_outcome(cdf, rng)];
  return Distribution::from_counts(state.num_qubits(), counts);
}

double z_expectation(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double z = 0.0;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    z += (i & bit) ? -std::norm(amps[i]) : std::norm(amps[i]);
  }
  return z;
}

}  // namespace coherence
