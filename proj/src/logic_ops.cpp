#include "coherence/logic_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coherence {

namespace {

std::int64_t pair_register_dim(int num_pairs) {
  if (num_pairs < 1 || num_pairs > kMaxDensePairs) {
    throw std::invalid_argument("pair count " + std::to_string(num_pairs) + " outside [1, " +
                                std::to_string(kMaxDensePairs) + "]");
  }
  return std::int64_t{1} << (2 * num_pairs);
}

bool pair_violated(std::uint64_t x, int num_pairs, int pair) {
  const bool c = (x >> pair) & 1U;
  const bool r = (x >> (num_pairs + pair)) & 1U;
  return c && !r;
}

template <typename Pred>
DenseOperator basis_projector(std::int64_t dim, Pred keep) {
  std::vector<std::complex<double>> diag(static_cast<std::size_t>(dim), 0.0);
  for (std::int64_t x = 0; x < dim; ++x)
    if (keep(static_cast<std::uint64_t>(x))) diag[static_cast<std::size_t>(x)] = 1.0;
  return DenseOperator::diagonal(diag);
}

}  // namespace

int violated_pairs(std::uint64_t x, int num_pairs) {
  int n = 0;
  for (int i = 0; i < num_pairs; ++i) n += pair_violated(x, num_pairs, i);
  return n;
}

DenseOperator contradiction_projector(int num_pairs, int pair) {
  const auto dim = pair_register_dim(num_pairs);
  if (pair < 0 || pair >= num_pairs) {
    throw std::out_of_range("pair index " + std::to_string(pair) + " out of range");
  }
  return basis_projector(dim, [&](std::uint64_t x) { return pair_violated(x, num_pairs, pair); });
}

DenseOperator global_consistency_projector(int num_pairs) {
  const auto dim = pair_register_dim(num_pairs);
  return basis_projector(dim, [&](std::uint64_t x) { return violated_pairs(x, num_pairs) == 0; });
}

DenseOperator reflection(const DenseOperator& projector) {
  if (!projector.is_projector()) throw std::invalid_argument("reflection: input is not a projector");
  return 2.0 * projector - DenseOperator::identity(projector.dim());
}

DenseOperator local_reflection_product(int num_pairs) {
  const auto dim = pair_register_dim(num_pairs);
  std::vector<std::complex<double>> diag(static_cast<std::size_t>(dim));
  for (std::int64_t x = 0; x < dim; ++x) {
    diag[static_cast<std::size_t>(x)] =
        (violated_pairs(static_cast<std::uint64_t>(x), num_pairs) % 2) ? -1.0 : 1.0;
  }
  return DenseOperator::diagonal(diag);
}

DenseOperator logic_hamiltonian(int num_pairs, HamiltonianForm form) {
  const auto dim = pair_register_dim(num_pairs);
  if (form == HamiltonianForm::complement) {
    return DenseOperator::identity(dim) - global_consistency_projector(num_pairs);
  }
  DenseOperator h = DenseOperator::zero(dim);
  for (int i = 0; i < num_pairs; ++i) h = h + contradiction_projector(num_pairs, i);
  return h;
}

DenseOperator projector_exponential(const DenseOperator& projector, double theta) {
  if (!projector.is_projector()) {
    throw std::invalid_argument("projector_exponential: input is not a projector");
  }
  const std::complex<double> coeff = std::polar(1.0, -theta) - 1.0;
  return DenseOperator::identity(projector.dim()) + coeff * projector;
}

DenseOperator taylor_exponential(const DenseOperator& a, int terms) {
  if (terms < 20) throw std::invalid_argument("taylor_exponential needs at least 20 terms");
  using Matrix = DenseOperator::Matrix;
  const auto n = a.dim();
  const Matrix step = std::complex<double>(0.0, -1.0) * a.matrix();
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k < terms; ++k) {
    term = (term * step) / static_cast<double>(k);
    sum += term;
  }
  return DenseOperator(std::move(sum));
}

}  // namespace coherence
