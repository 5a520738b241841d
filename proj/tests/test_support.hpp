#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "coherence/circuit.hpp"

namespace coherence::testing {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Mat single_qubit_matrix(GateKind kind) {
  const double s = 1.0 / std::sqrt(2.0);
  const cd i{0.0, 1.0};
  Mat m(2, 2);
  switch (kind) {
    case GateKind::H: m << s, s, s, -s; break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Y: m << 0, -i, i, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::T: m << 1, 0, 0, std::exp(i * (M_PI / 4)); break;
    case GateKind::Tdg: m << 1, 0, 0, std::exp(-i * (M_PI / 4)); break;
    default: m << 0, 1, 1, 0; break;  // target action of CNOT/CCX/MCX
  }
  return m;
}

/// Full 2^n x 2^n matrix of one gate, assembled entry by entry from the
/// textbook definition (index bit k is qubit k).
inline Mat gate_matrix(const Gate& g, int n) {
  const std::int64_t dim = std::int64_t{1} << n;
  Mat u = Mat::Zero(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    bool fire = true;
    for (std::size_t k = 0; k < g.controls.size(); ++k) {
      const bool bit = (col >> g.controls[k]) & 1;
      const bool want = g.polarities[k] == Polarity::positive;
      fire = fire && (bit == want);
    }
    if (g.kind == GateKind::CP) {
      const bool t = (col >> g.targets[0]) & 1;
      u(col, col) = (fire && t) ? std::exp(cd{0.0, g.angle}) : cd{1.0, 0.0};
      continue;
    }
    if (!fire) {
      u(col, col) = 1.0;
      continue;
    }
    const int q = g.targets[0];
    const Mat m = single_qubit_matrix(g.kind);
    const int b = static_cast<int>((col >> q) & 1);
    for (int a = 0; a < 2; ++a) {
      const std::int64_t row = (col & ~(std::int64_t{1} << q)) | (std::int64_t{a} << q);
      u(row, col) += m(a, b);
    }
  }
  return u;
}

inline Mat circuit_matrix(const std::vector<Gate>& gates, int n) {
  Mat u = Mat::Identity(std::int64_t{1} << n, std::int64_t{1} << n);
  for (const auto& g : gates) u = gate_matrix(g, n) * u;
  return u;
}

inline double max_diff_up_to_phase(const Mat& a, const Mat& b) {
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  const cd phase = a(r, c) / b(r, c);
  return (a - (phase / std::abs(phase)) * b).cwiseAbs().maxCoeff();
}

/// Random circuit over the simulator's gate set, deterministic per seed.
inline Circuit random_circuit(int n, int length, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto pick = [&](int hi) { return static_cast<int>(gen() % static_cast<std::uint64_t>(hi)); };
  auto distinct = [&](int k) {
    std::vector<int> q(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i)] = i;
    std::shuffle(q.begin(), q.end(), gen);
    q.resize(static_cast<std::size_t>(k));
    return q;
  };
  auto pol = [&] { return pick(2) ? Polarity::positive : Polarity::negated; };
  Circuit c(n);
  for (int i = 0; i < length; ++i) {
    switch (pick(n >= 3 ? 10 : 8)) {
      case 0: c.add(Gate::h(pick(n))); break;
      case 1: c.add(Gate::x(pick(n))); break;
      case 2: c.add(Gate::y(pick(n))); break;
      case 3: c.add(Gate::z(pick(n))); break;
      case 4: c.add(Gate::t(pick(n))); break;
      case 5: c.add(Gate::tdg(pick(n))); break;
      case 6: { auto q = distinct(2); c.add(Gate::cnot(q[0], q[1], pol())); break; }
      case 7: {
        auto q = distinct(2);
        c.add(Gate::cp(std::uniform_real_distribution<double>(-M_PI, M_PI)(gen), q[0], q[1], pol()));
        break;
      }
      case 8: { auto q = distinct(3); c.add(Gate::ccx(q[0], q[1], q[2], pol(), pol())); break; }
      default: {
        const int k = 1 + pick(n - 1);
        auto q = distinct(k + 1);
        std::vector<int> ctl(q.begin(), q.end() - 1);
        std::vector<Polarity> ps;
        for (int j = 0; j < k; ++j) ps.push_back(pol());
        c.add(Gate::mcx(ctl, q.back(), ps));
      }
    }
  }
  return c;
}

}  // namespace coherence::testing
