#include <stdexcept>

#include "coherence/circuit.hpp"

namespace coherence {

// Standard Clifford+T network: 6 CNOT, 2 H, 7 T/T^dagger. Exact (no global
// phase) for positive controls.
std::vector<Gate> toffoli_decompose(const Gate& gate) {
  if (gate.kind != GateKind::CCX) {
    throw std::invalid_argument("toffoli_decompose expects a CCX gate, got " +
                                std::string(to_string(gate.kind)));
  }
  if (gate.controls.size() != 2 || gate.polarities.size() != 2 || gate.targets.size() != 1) {
    throw std::invalid_argument("malformed CCX gate");
  }
  const int a = gate.controls[0];
  const int b = gate.controls[1];
  const int t = gate.targets[0];

  std::vector<Gate> out;
  for (std::size_t i = 0; i < 2; ++i)
    if (gate.polarities[i] == Polarity::negated) out.push_back(Gate::x(gate.controls[i]));

  out.push_back(Gate::h(t));
  out.push_back(Gate::cnot(b, t));
  out.push_back(Gate::tdg(t));
  out.push_back(Gate::cnot(a, t));
  out.push_back(Gate::t(t));
  out.push_back(Gate::cnot(b, t));
  out.push_back(Gate::tdg(t));
  out.push_back(Gate::cnot(a, t));
  out.push_back(Gate::t(b));
  out.push_back(Gate::t(t));
  out.push_back(Gate::h(t));
  out.push_back(Gate::cnot(a, b));
  out.push_back(Gate::t(a));
  out.push_back(Gate::tdg(b));
  out.push_back(Gate::cnot(a, b));

  for (std::size_t i = 0; i < 2; ++i)
    if (gate.polarities[i] == Polarity::negated) out.push_back(Gate::x(gate.controls[i]));
  return out;
}

}  // namespace coherence
