#include "coherence/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace coherence {

namespace {

struct KindName {
  GateKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {GateKind::H, "H"},       {GateKind::X, "X"},     {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},       {GateKind::T, "T"},     {GateKind::Tdg, "TDG"},
    {GateKind::CNOT, "CNOT"}, {GateKind::CCX, "CCX"}, {GateKind::MCX, "MCX"},
    {GateKind::CP, "CP"},
};

struct RoleName {
  Role role;
  std::string_view name;
};

constexpr RoleName kRoleNames[] = {
    {Role::statement, "statement"},   {Role::negation, "negation"},
    {Role::contradiction, "contradiction"}, {Role::resolution, "resolution"},
    {Role::detector, "detector"},     {Role::flag, "flag"},
    {Role::ancilla, "ancilla"},
};

bool is_single_qubit(GateKind k) {
  return k == GateKind::H || k == GateKind::X || k == GateKind::Y || k == GateKind::Z ||
         k == GateKind::T || k == GateKind::Tdg;
}

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  for (const auto& kn : kKindNames)
    if (kn.name == name) return kn.kind;
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

std::string_view to_string(Role role) {
  for (const auto& rn : kRoleNames)
    if (rn.role == role) return rn.name;
  return "?";
}

Role parse_role(std::string_view name) {
  for (const auto& rn : kRoleNames)
    if (rn.name == name) return rn.role;
  throw std::invalid_argument("unknown qubit role '" + std::string(name) + "'");
}

std::string_view to_string(CascadeMode mode) {
  return mode == CascadeMode::parity ? "parity" : "or";
}

CascadeMode parse_cascade_mode(std::string_view name) {
  if (name == "parity") return CascadeMode::parity;
  if (name == "or" || name == "or_accumulate") return CascadeMode::or_accumulate;
  throw std::invalid_argument("unknown cascade mode '" + std::string(name) + "'");
}

// ---- Gate -----------------------------------------------------------------

Gate Gate::h(int q) { return Gate{GateKind::H, {}, {}, {q}, 0.0}; }
Gate Gate::x(int q) { return Gate{GateKind::X, {}, {}, {q}, 0.0}; }
Gate Gate::y(int q) { return Gate{GateKind::Y, {}, {}, {q}, 0.0}; }
Gate Gate::z(int q) { return Gate{GateKind::Z, {}, {}, {q}, 0.0}; }
Gate Gate::t(int q) { return Gate{GateKind::T, {}, {}, {q}, 0.0}; }
Gate Gate::tdg(int q) { return Gate{GateKind::Tdg, {}, {}, {q}, 0.0}; }

Gate Gate::cnot(int control, int target, Polarity p) {
  return Gate{GateKind::CNOT, {control}, {p}, {target}, 0.0};
}

Gate Gate::ccx(int c0, int c1, int target, Polarity p0, Polarity p1) {
  return Gate{GateKind::CCX, {c0, c1}, {p0, p1}, {target}, 0.0};
}

Gate Gate::mcx(std::vector<int> controls, int target, std::vector<Polarity> polarities) {
  return Gate{GateKind::MCX, std::move(controls), std::move(polarities), {target}, 0.0};
}

Gate Gate::cp(double angle, int control, int target, Polarity p) {
  return Gate{GateKind::CP, {control}, {p}, {target}, angle};
}

std::vector<int> Gate::qubits() const {
  std::vector<int> q = controls;
  q.insert(q.end(), targets.begin(), targets.end());
  return q;
}

bool Gate::has_negated_control() const {
  return std::find(polarities.begin(), polarities.end(), Polarity::negated) != polarities.end();
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::T: g.kind = GateKind::Tdg; break;
    case GateKind::Tdg: g.kind = GateKind::T; break;
    case GateKind::CP: g.angle = -angle; break;
    default: break;
  }
  return g;
}

void Gate::validate(int num_qubits) const {
  const std::string name(to_string(kind));
  std::size_t want_controls = 0;
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CP: want_controls = 1; break;
    case GateKind::CCX: want_controls = 2; break;
    case GateKind::MCX:
      if (controls.empty()) throw std::invalid_argument("MCX needs at least one control");
      want_controls = controls.size();
      break;
    default: break;
  }
  if (controls.size() != want_controls) {
    throw std::invalid_argument(name + " expects " + std::to_string(want_controls) +
                                " control(s), got " + std::to_string(controls.size()));
  }
  if (polarities.size() != controls.size()) {
    throw std::invalid_argument(name + ": one polarity per control required");
  }
  if (targets.size() != 1) {
    throw std::invalid_argument(name + " expects exactly one target");
  }
  if (kind == GateKind::CP && !std::isfinite(angle)) {
    throw std::invalid_argument("CP angle must be finite");
  }
  std::set<int> seen;
  for (int q : qubits()) {
    if (q < 0 || q >= num_qubits) {
      throw std::out_of_range(name + ": qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    if (!seen.insert(q).second) {
      throw std::invalid_argument(name + ": qubit index " + std::to_string(q) + " repeated");
    }
  }
}

// ---- Circuit --------------------------------------------------------------

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit& Circuit::add(Gate gate) {
  gate.validate(num_qubits_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::set_role(int qubit, Role role) {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw std::out_of_range("role assigned to qubit " + std::to_string(qubit) +
                            " outside register");
  }
  if (role == Role::flag) {
    auto flag = flag_qubit();
    if (flag && *flag != qubit) {
      throw std::invalid_argument("circuit already has a flag qubit (" + std::to_string(*flag) +
                                  ")");
    }
  }
  roles_[qubit] = role;
  return *this;
}

std::optional<int> Circuit::flag_qubit() const {
  for (const auto& [q, role] : roles_)
    if (role == Role::flag) return q;
  return std::nullopt;
}

Circuit Circuit::inverse() const {
  Circuit inv(num_qubits_);
  inv.roles_ = roles_;
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) inv.gates_.push_back(it->inverse());
  return inv;
}

// ---- PairLayout -----------------------------------------------------------

PairLayout PairLayout::standard(int num_pairs) {
  if (num_pairs < 1) throw std::invalid_argument("layout needs at least one pair");
  PairLayout layout;
  for (int i = 0; i < num_pairs; ++i) layout.pairs.emplace_back(i, num_pairs + i);
  layout.flag = 2 * num_pairs;
  return layout;
}

int PairLayout::max_index() const {
  int m = flag;
  for (const auto& [c, r] : pairs) m = std::max({m, c, r});
  return m;
}

void PairLayout::validate() const {
  if (pairs.empty()) throw std::invalid_argument("layout needs at least one pair");
  std::set<int> seen{flag};
  if (flag < 0) throw std::invalid_argument("negative flag index");
  for (const auto& [c, r] : pairs) {
    if (c < 0 || r < 0) throw std::invalid_argument("negative qubit index in layout");
    if (!seen.insert(c).second || !seen.insert(r).second) {
      throw std::invalid_argument("layout indices must be pairwise distinct");
    }
  }
}

// ---- census ---------------------------------------------------------------

int circuit_depth(const std::vector<Gate>& gates, int num_qubits) {
  std::vector<int> level(static_cast<std::size_t>(num_qubits), 0);
  int depth = 0;
  for (const auto& g : gates) {
    int layer = 0;
    for (int q : g.qubits()) layer = std::max(layer, level[static_cast<std::size_t>(q)]);
    ++layer;
    for (int q : g.qubits()) level[static_cast<std::size_t>(q)] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

GateCensus gate_census(const Circuit& circuit, bool decompose) {
  GateCensus c;
  std::vector<Gate> flat;
  flat.reserve(circuit.size());
  for (const auto& g : circuit.gates()) {
    if (decompose && g.kind == GateKind::CCX) {
      for (auto& sub : toffoli_decompose(g)) {
        if (sub.arity() == 2) ++c.count_2q_toffoli;
        flat.push_back(std::move(sub));
      }
    } else {
      flat.push_back(g);
    }
  }
  for (const auto& g : flat) {
    if (is_single_qubit(g.kind)) {
      ++c.count_1q;
    } else if (g.kind == GateKind::CCX) {
      ++c.count_ccx;
    } else if (g.kind == GateKind::MCX && g.arity() > 2) {
      ++c.count_mcx;
    } else {
      ++c.count_2q;
    }
  }
  c.depth = circuit_depth(flat, circuit.num_qubits());
  return c;
}

}  // namespace coherence
