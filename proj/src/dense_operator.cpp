#include "coherence/dense_operator.hpp"

#include <stdexcept>
#include <string>

namespace coherence {

namespace {

void check_dims(const DenseOperator& a, const DenseOperator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("operator dimensions differ: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

DenseOperator::DenseOperator(Matrix m) : m_(std::move(m)) {
  const auto n = m_.rows();
  if (n != m_.cols()) throw std::invalid_argument("operator matrix must be square");
  if (n < 1 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("operator dimension must be a power of two, got " +
                                std::to_string(n));
  }
  if (n > kMaxDim) {
    throw std::invalid_argument("operator dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxDim));
  }
}

DenseOperator DenseOperator::identity(std::int64_t dim) {
  return DenseOperator(Matrix::Identity(dim, dim));
}

DenseOperator DenseOperator::zero(std::int64_t dim) { return DenseOperator(Matrix::Zero(dim, dim)); }

DenseOperator DenseOperator::diagonal(const std::vector<std::complex<double>>& diag) {
  const auto n = static_cast<std::int64_t>(diag.size());
  Matrix m = Matrix::Zero(n, n);
  for (std::int64_t i = 0; i < n; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return DenseOperator(std::move(m));
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(m_.adjoint()); }

bool DenseOperator::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool DenseOperator::is_unitary(double tol) const {
  const Matrix d = m_.adjoint() * m_ - Matrix::Identity(dim(), dim());
  return d.cwiseAbs().maxCoeff() < tol;
}

bool DenseOperator::is_projector(double tol) const {
  if (!is_hermitian(tol)) return false;
  return (m_ * m_ - m_).cwiseAbs().maxCoeff() < tol;
}

std::vector<double> DenseOperator::hermitian_eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  check_dims(a, b);
  return DenseOperator(a.m_ + b.m_);
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  check_dims(a, b);
  return DenseOperator(a.m_ - b.m_);
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  check_dims(a, b);
  return DenseOperator(a.m_ * b.m_);
}

DenseOperator operator*(std::complex<double> s, const DenseOperator& a) {
  return DenseOperator(s * a.m_);
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  check_dims(a, b);
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

double max_abs_diff_up_to_phase(const DenseOperator& a, const DenseOperator& b) {
  check_dims(a, b);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  a.matrix().cwiseAbs().maxCoeff(&r, &c);
  const std::complex<double> bv = b.matrix()(r, c);
  if (std::abs(bv) < 1e-15) return max_abs_diff(a, b);
  const std::complex<double> phase = a.matrix()(r, c) / bv;
  const std::complex<double> unit = phase / std::abs(phase);
  return (a.matrix() - unit * b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace coherence
