#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coherence {

enum class GateKind { H, X, Y, Z, T, Tdg, CNOT, CCX, MCX, CP };

/// A control fires on |1> (positive) or on |0> (negated).
enum class Polarity { positive, negated };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

/// One gate over indexed qubits.
///
/// Controlled kinds (CNOT, CCX, MCX) carry their controls and a matching
/// polarity per control; the single target is `targets[0]`. CP is the
/// symmetric controlled phase diag(1, 1, 1, e^{i angle}) on `controls[0]`
/// and `targets[0]`; its control may also be negated. Negated controls are
/// equivalent to conjugating a positive control by X.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> controls;
  std::vector<Polarity> polarities;
  std::vector<int> targets;
  double angle = 0.0;

  static Gate h(int q);
  static Gate x(int q);
  static Gate y(int q);
  static Gate z(int q);
  static Gate t(int q);
  static Gate tdg(int q);
  static Gate cnot(int control, int target, Polarity p = Polarity::positive);
  static Gate ccx(int c0, int c1, int target, Polarity p0 = Polarity::positive,
                  Polarity p1 = Polarity::positive);
  static Gate mcx(std::vector<int> controls, int target, std::vector<Polarity> polarities);
  static Gate cp(double angle, int control, int target, Polarity p = Polarity::positive);

  /// Controls followed by targets.
  std::vector<int> qubits() const;
  int arity() const { return static_cast<int>(controls.size() + targets.size()); }
  bool has_negated_control() const;

  /// The gate undoing this one.
  Gate inverse() const;

  /// Throws std::invalid_argument / std::out_of_range if the gate is
  /// malformed for a register of `num_qubits`.
  void validate(int num_qubits) const;

  bool operator==(const Gate&) const = default;
};

enum class Role { statement, negation, contradiction, resolution, detector, flag, ancilla };

std::string_view to_string(Role role);
Role parse_role(std::string_view name);

/// Ordered gate list over a fixed register, with optional role tags.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::map<int, Role>& roles() const { return roles_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(Gate gate);
  Circuit& set_role(int qubit, Role role);

  /// Index of the qubit tagged `flag`, if any.
  std::optional<int> flag_qubit() const;

  /// The circuit run backwards with every gate inverted.
  Circuit inverse() const;

  bool operator==(const Circuit&) const = default;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
  std::map<int, Role> roles_;
};

/// Contradiction/resolution pairs sharing one coherence flag.
struct PairLayout {
  std::vector<std::pair<int, int>> pairs;  // (contradiction, resolution)
  int flag = 0;

  /// Contradictions at 0..m-1, resolutions at m..2m-1, flag at 2m.
  static PairLayout standard(int num_pairs);

  int num_pairs() const { return static_cast<int>(pairs.size()); }
  int max_index() const;
  void validate() const;
};

enum class CascadeMode {
  parity,         // one flag flip per violated pair
  or_accumulate,  // one flag flip if any pair is violated
};

std::string_view to_string(CascadeMode mode);
CascadeMode parse_cascade_mode(std::string_view name);

struct GeneralOptions {
  CascadeMode mode = CascadeMode::parity;
  /// Append CP(pi; flag, r_i) after each pair's Toffoli.
  bool with_phase = false;
  /// Use a positive control on r_i instead of the negated one.
  bool positive_resolution_control = false;
};

/// H(q0), CNOT(q0->q1), CCX(q0,q1->q2), CP(pi; q2,q3) exactly as printed.
Circuit build_liar_literal();

/// X(q3), H(q0), X(q1), CNOT(q0->q1), CCX(q0,q1->q2), CP(pi; q2,q3).
/// From |0000> this yields (|1001> + |1010>)/sqrt(2).
Circuit build_liar_reference();

/// Flag cascade over `layout`. Parity mode uses exactly the layout's qubits.
/// or_accumulate appends one ancilla per pair after the highest layout index;
/// ancillas are computed, OR-ed into the flag, and uncomputed.
Circuit build_general(const PairLayout& layout, const GeneralOptions& options = {});

/// Six-CNOT expansion of a CCX. Negated controls are wrapped in X gates.
/// Throws std::invalid_argument for any other gate kind.
std::vector<Gate> toffoli_decompose(const Gate& gate);

struct GateCensus {
  int count_1q = 0;
  int count_2q = 0;
  int count_ccx = 0;
  int count_mcx = 0;
  /// Two-qubit gates produced by expanding Toffolis (decompose mode only).
  int count_2q_toffoli = 0;
  int depth = 0;

  bool operator==(const GateCensus&) const = default;
};

/// Gate counts and greedy-layer depth. With `decompose`, each CCX is
/// replaced by its toffoli_decompose() expansion before counting.
GateCensus gate_census(const Circuit& circuit, bool decompose);

/// Greedy layering depth of a gate list: a gate goes one layer after the
/// latest layer touching any of its qubits.
int circuit_depth(const std::vector<Gate>& gates, int num_qubits);

}  // namespace coherence
