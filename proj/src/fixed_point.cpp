#include <cmath>
#include <stdexcept>
#include <string>

#include "coherence/logic_ops.hpp"
#include "coherence/statevec.hpp"

namespace coherence {

namespace {

bool column_is_basis(const DenseOperator& op, std::int64_t x, std::complex<double> eigenvalue,
                     double tol) {
  for (std::int64_t row = 0; row < op.dim(); ++row) {
    const std::complex<double> want = row == x ? eigenvalue : 0.0;
    if (std::abs(op(row, x) - want) > tol) return false;
  }
  return true;
}

std::uint64_t basis_output(const Circuit& circuit, std::uint64_t input) {
  const StateVector out = run_circuit(circuit, StateVector::basis(circuit.num_qubits(), input));
  const auto probs = probabilities(out);
  if (probs.entries().size() != 1) throw std::logic_error("cascade output is not a basis state");
  return probs.entries().begin()->first;
}

}  // namespace

FixedPointReport fixed_point_report(int num_pairs) {
  if (num_pairs < 1 || num_pairs > kMaxDensePairs) {
    throw std::invalid_argument("fixed_point_report supports 1.." +
                                std::to_string(kMaxDensePairs) + " pairs");
  }
  FixedPointReport rep;
  rep.num_pairs = num_pairs;

  const DenseOperator pi = global_consistency_projector(num_pairs);
  const DenseOperator u = reflection(pi);
  const DenseOperator h = logic_hamiltonian(num_pairs);
  const auto dim = pi.dim();

  for (std::int64_t x = 0; x < dim; ++x) {
    if (column_is_basis(u, x, 1.0, 1e-12)) rep.reflection_fixed_basis.push_back(x);
    if (column_is_basis(h, x, 0.0, 1e-12)) rep.kernel_basis.push_back(x);
  }
  rep.basis_sets_equal = rep.reflection_fixed_basis == rep.kernel_basis;

  for (double ev : u.hermitian_eigenvalues())
    if (ev > 0.0) ++rep.reflection_plus_dimension;

  Eigen::SelfAdjointEigenSolver<DenseOperator::Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");
  DenseOperator::Matrix kernel_proj = DenseOperator::Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    if (std::abs(solver.eigenvalues()(k)) < 1e-9) {
      ++rep.kernel_dimension;
      const auto v = solver.eigenvectors().col(k);
      kernel_proj += v * v.adjoint();
    }
  }
  const DenseOperator plus_proj = 0.5 * (DenseOperator::identity(dim) + u);
  rep.eigenspace_deviation = max_abs_diff(plus_proj, DenseOperator(kernel_proj));

  const PairLayout layout = PairLayout::standard(num_pairs);
  const Circuit cascade = build_general(layout, {});
  const std::uint64_t full_dim = std::uint64_t{1} << cascade.num_qubits();
  const std::uint64_t pair_mask = (std::uint64_t{1} << (2 * num_pairs)) - 1;
  const std::uint64_t flag_bit = std::uint64_t{1} << layout.flag;

  std::vector<std::uint64_t> image(full_dim);
  for (std::uint64_t x = 0; x < full_dim; ++x) {
    CascadeRow row;
    row.input = x;
    row.output = basis_output(cascade, x);
    row.fixed = row.output == x;
    row.claimed_fixed = violated_pairs(x & pair_mask, num_pairs) == 0 && (x & flag_bit);
    image[x] = row.output;
    if (row.claimed_fixed) ++rep.claimed_dimension;
    if (row.fixed && !row.claimed_fixed) rep.fixed_not_claimed.push_back(x);
    if (!row.fixed && row.claimed_fixed) rep.claimed_not_fixed.push_back(x);
    rep.cascade.push_back(row);
  }

  // A permutation has one +1 eigenvector per cycle.
  std::vector<bool> seen(full_dim, false);
  for (std::uint64_t x = 0; x < full_dim; ++x) {
    if (seen[x]) continue;
    ++rep.cascade_fixed_dimension;
    for (std::uint64_t y = x; !seen[y]; y = image[y]) seen[y] = true;
  }
  return rep;
}

}  // namespace coherence
