#include <numbers>
#include <stdexcept>

#include "coherence/circuit.hpp"

namespace coherence {

namespace {

void tag_liar_roles(Circuit& c) {
  c.set_role(0, Role::statement)
      .set_role(1, Role::negation)
      .set_role(2, Role::detector)
      .set_role(3, Role::flag);
}

}  // namespace

Circuit build_liar_literal() {
  Circuit c(4);
  c.add(Gate::h(0))
      .add(Gate::cnot(0, 1))
      .add(Gate::ccx(0, 1, 2))
      .add(Gate::cp(std::numbers::pi, 2, 3));
  tag_liar_roles(c);
  return c;
}

Circuit build_liar_reference() {
  Circuit c(4);
  c.add(Gate::x(3))
      .add(Gate::h(0))
      .add(Gate::x(1))
      .add(Gate::cnot(0, 1))
      .add(Gate::ccx(0, 1, 2))
      .add(Gate::cp(std::numbers::pi, 2, 3));
  tag_liar_roles(c);
  return c;
}

Circuit build_general(const PairLayout& layout, const GeneralOptions& options) {
  layout.validate();
  const int m = layout.num_pairs();
  const int base = layout.max_index() + 1;
  const bool with_ancillas = options.mode == CascadeMode::or_accumulate;
  Circuit c(with_ancillas ? base + m : base);

  for (const auto& [ci, ri] : layout.pairs) {
    c.set_role(ci, Role::contradiction).set_role(ri, Role::resolution);
  }
  c.set_role(layout.flag, Role::flag);

  const Polarity r_pol =
      options.positive_resolution_control ? Polarity::positive : Polarity::negated;

  if (!with_ancillas) {
    for (const auto& [ci, ri] : layout.pairs) {
      c.add(Gate::ccx(ci, ri, layout.flag, Polarity::positive, r_pol));
      if (options.with_phase) c.add(Gate::cp(std::numbers::pi, layout.flag, ri));
    }
    return c;
  }

  // a_i = c_i AND (NOT r_i); flag ^= NOT(AND_i NOT a_i) = OR_i a_i.
  std::vector<int> ancillas;
  for (int i = 0; i < m; ++i) {
    const int a = base + i;
    ancillas.push_back(a);
    c.set_role(a, Role::ancilla);
    const auto& [ci, ri] = layout.pairs[static_cast<std::size_t>(i)];
    c.add(Gate::ccx(ci, ri, a, Polarity::positive, r_pol));
  }
  std::vector<Polarity> all_negated(ancillas.size(), Polarity::negated);
  if (m == 1) {
    c.add(Gate::cnot(ancillas[0], layout.flag, Polarity::negated));
  } else if (m == 2) {
    c.add(Gate::ccx(ancillas[0], ancillas[1], layout.flag, Polarity::negated, Polarity::negated));
  } else {
    c.add(Gate::mcx(ancillas, layout.flag, all_negated));
  }
  c.add(Gate::x(layout.flag));
  if (options.with_phase) {
    for (const auto& [_, ri] : layout.pairs) c.add(Gate::cp(std::numbers::pi, layout.flag, ri));
  }
  for (int i = m - 1; i >= 0; --i) {
    const auto& [ci, ri] = layout.pairs[static_cast<std::size_t>(i)];
    c.add(Gate::ccx(ci, ri, ancillas[static_cast<std::size_t>(i)], Polarity::positive, r_pol));
  }
  return c;
}

}  // namespace coherence
