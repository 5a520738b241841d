#include <stdexcept>
#include <string>

#include "coherence/logic_ops.hpp"
#include "coherence/statevec.hpp"

namespace coherence {

namespace {

bool is_bit(int v) { return v == 0 || v == 1; }

}  // namespace

void ClassicalAssignment::validate() const {
  if (contradictions.empty()) throw std::invalid_argument("assignment needs at least one pair");
  if (contradictions.size() != resolutions.size()) {
    throw std::invalid_argument("contradiction and resolution sequences differ in length");
  }
  for (int v : contradictions)
    if (!is_bit(v)) throw std::invalid_argument("contradiction bits must be 0 or 1");
  for (int v : resolutions)
    if (!is_bit(v)) throw std::invalid_argument("resolution bits must be 0 or 1");
  if (!is_bit(flag_in)) throw std::invalid_argument("flag_in must be 0 or 1");
}

int ClassicalAssignment::violations() const {
  int n = 0;
  for (std::size_t i = 0; i < contradictions.size(); ++i)
    n += contradictions[i] == 1 && resolutions[i] == 0;
  return n;
}

std::uint64_t ClassicalAssignment::basis_index() const {
  validate();
  const int m = num_pairs();
  std::uint64_t x = 0;
  for (int i = 0; i < m; ++i) {
    x |= static_cast<std::uint64_t>(contradictions[static_cast<std::size_t>(i)]) << i;
    x |= static_cast<std::uint64_t>(resolutions[static_cast<std::size_t>(i)]) << (m + i);
  }
  x |= static_cast<std::uint64_t>(flag_in) << (2 * m);
  return x;
}

ClassicalAssignment ClassicalAssignment::from_basis_index(std::uint64_t index, int num_pairs) {
  ClassicalAssignment a;
  for (int i = 0; i < num_pairs; ++i) {
    a.contradictions.push_back(static_cast<int>((index >> i) & 1U));
    a.resolutions.push_back(static_cast<int>((index >> (num_pairs + i)) & 1U));
  }
  a.flag_in = static_cast<int>((index >> (2 * num_pairs)) & 1U);
  return a;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::fully_consistent: return "fully consistent";
    case Classification::locally_resolved: return "locally resolved";
    case Classification::inconsistency_detected: return "inconsistency detected";
    case Classification::fully_inconsistent: return "fully inconsistent";
  }
  return "?";
}

ClassicalResult classical_rule(const ClassicalAssignment& assignment) {
  assignment.validate();
  ClassicalResult r;
  r.violations = assignment.violations();
  r.flag_out = assignment.flag_in ^ (r.violations > 0 ? 1 : 0);

  bool any_active = false;
  for (int c : assignment.contradictions) any_active |= c == 1;

  if (!any_active) {
    r.classification = Classification::fully_consistent;
  } else if (r.violations == 0) {
    r.classification = Classification::locally_resolved;
  } else if (assignment.num_pairs() > 1 && r.violations == assignment.num_pairs()) {
    r.classification = Classification::fully_inconsistent;
  } else {
    r.classification = Classification::inconsistency_detected;
  }
  return r;
}

int circuit_flag_output(const Circuit& circuit, const PairLayout& layout,
                        const ClassicalAssignment& assignment) {
  assignment.validate();
  if (assignment.num_pairs() != layout.num_pairs()) {
    throw std::invalid_argument("assignment and layout pair counts differ");
  }
  std::uint64_t input = 0;
  for (int i = 0; i < layout.num_pairs(); ++i) {
    const auto& [ci, ri] = layout.pairs[static_cast<std::size_t>(i)];
    input |= static_cast<std::uint64_t>(assignment.contradictions[static_cast<std::size_t>(i)]) << ci;
    input |= static_cast<std::uint64_t>(assignment.resolutions[static_cast<std::size_t>(i)]) << ri;
  }
  input |= static_cast<std::uint64_t>(assignment.flag_in) << layout.flag;

  const StateVector out = run_circuit(circuit, StateVector::basis(circuit.num_qubits(), input));
  const auto probs = probabilities(out);
  if (probs.entries().size() != 1) {
    throw std::logic_error("circuit output is not a computational basis state");
  }
  const std::uint64_t result = probs.entries().begin()->first;
  return static_cast<int>((result >> layout.flag) & 1U);
}

}  // namespace coherence
