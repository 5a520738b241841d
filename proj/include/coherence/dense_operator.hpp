#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace coherence {

/// Square complex matrix whose dimension is a power of two.
///
/// Used for exact operator identities on small registers; the simulator
/// never builds one.
class DenseOperator {
 public:
  using Matrix = Eigen::MatrixXcd;

  static constexpr std::int64_t kMaxDim = 1024;

  explicit DenseOperator(Matrix m);

  static DenseOperator identity(std::int64_t dim);
  static DenseOperator zero(std::int64_t dim);
  static DenseOperator diagonal(const std::vector<std::complex<double>>& diag);

  std::int64_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  std::complex<double> operator()(std::int64_t row, std::int64_t col) const { return m_(row, col); }

  DenseOperator adjoint() const;
  std::complex<double> trace() const { return m_.trace(); }

  bool is_hermitian(double tol = 1e-12) const;
  bool is_unitary(double tol = 1e-9) const;
  bool is_projector(double tol = 1e-9) const;

  /// Eigenvalues of a Hermitian operator, ascending.
  std::vector<double> hermitian_eigenvalues() const;

  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator*(std::complex<double> s, const DenseOperator& a);

 private:
  Matrix m_;
};

/// max_{ij} |a_ij - b_ij|.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// Same as max_abs_diff after removing the global phase that best aligns b
/// with a (taken from the largest-magnitude entry of a).
double max_abs_diff_up_to_phase(const DenseOperator& a, const DenseOperator& b);

}  // namespace coherence
