#include <numbers>

#include <gtest/gtest.h>

#include "coherence/logic_ops.hpp"
#include "test_support.hpp"

namespace coherence {
namespace {

using testing::kron;
using testing::Mat;

Mat ket_bra(int bit) {
  Mat m = Mat::Zero(2, 2);
  m(bit, bit) = 1.0;
  return m;
}

// P_i as a Kronecker product, highest qubit leftmost.
Mat kron_pair_projector(int m, int pair) {
  Mat out = Mat::Identity(1, 1);
  for (int q = 2 * m - 1; q >= 0; --q) {
    Mat factor = Mat::Identity(2, 2);
    if (q == pair) factor = ket_bra(1);
    if (q == m + pair) factor = ket_bra(0);
    out = kron(out, factor);
  }
  return out;
}

Mat kron_consistency_projector(int m) {
  const Eigen::Index dim = Eigen::Index{1} << (2 * m);
  Mat pi = Mat::Identity(dim, dim);
  for (int i = 0; i < m; ++i) pi = pi * (Mat::Identity(dim, dim) - kron_pair_projector(m, i));
  return pi;
}

TEST(Projectors, MatchTheKroneckerConstruction) {
  for (int m = 1; m <= 4; ++m) {
    for (int i = 0; i < m; ++i) {
      EXPECT_LT((contradiction_projector(m, i).matrix() - kron_pair_projector(m, i)).cwiseAbs().maxCoeff(), 1e-15);
    }
    EXPECT_LT((global_consistency_projector(m).matrix() - kron_consistency_projector(m)).cwiseAbs().maxCoeff(),
              1e-15);
  }
}

TEST(Projectors, RankIsThreeToTheM) {
  for (int m = 1; m <= 5; ++m) {
    EXPECT_NEAR(global_consistency_projector(m).trace().real(), std::pow(3.0, m), 1e-9);
  }
}

TEST(Projectors, ViolatedPairsCount) {
  EXPECT_EQ(violated_pairs(0b01, 1), 1);
  EXPECT_EQ(violated_pairs(0b11, 1), 0);
  EXPECT_EQ(violated_pairs(0b0011, 2), 2);
  EXPECT_EQ(violated_pairs(0b0111, 2), 1);
}

TEST(Reflection, InvolutionHermitianUnitary) {
  for (int m = 1; m <= 4; ++m) {
    const auto u = reflection(global_consistency_projector(m));
    const auto id = DenseOperator::identity(u.dim());
    EXPECT_LT(max_abs_diff(u * u, id), 1e-12);
    EXPECT_TRUE(u.is_hermitian());
    EXPECT_TRUE(u.is_unitary());
  }
  EXPECT_THROW(reflection(DenseOperator::diagonal({0.5, 1.0})), std::invalid_argument);
}

TEST(Hamiltonian, BothFormsShareTheKernelOnly) {
  for (int m = 1; m <= 3; ++m) {
    const auto sum = logic_hamiltonian(m, HamiltonianForm::penalty_sum);
    const auto comp = logic_hamiltonian(m, HamiltonianForm::complement);
    for (std::int64_t x = 0; x < sum.dim(); ++x) {
      const int v = violated_pairs(static_cast<std::uint64_t>(x), m);
      EXPECT_NEAR(sum(x, x).real(), v, 1e-15);
      EXPECT_NEAR(comp(x, x).real(), v > 0 ? 1.0 : 0.0, 1e-15);
    }
    EXPECT_NEAR(max_abs_diff(sum, comp), m - 1, 1e-12);
  }
}

TEST(Exponential, ClosedFormMatchesTaylorOracle) {
  const auto p = global_consistency_projector(2);
  for (double theta : {0.0, 0.3, 1.0, std::numbers::pi, 2.5}) {
    const auto closed = projector_exponential(p, theta);
    const auto series = taylor_exponential(theta * p, 60);
    EXPECT_LT(max_abs_diff(closed, series), 1e-12) << theta;
  }
}

TEST(Exponential, ReflectionEqualsExpOfHamiltonian) {
  for (int m = 1; m <= 4; ++m) {
    const auto u = reflection(global_consistency_projector(m));
    const auto h = logic_hamiltonian(m, HamiltonianForm::complement);
    const auto e = taylor_exponential(std::numbers::pi * h, 60);
    EXPECT_LT(max_abs_diff(u, e), 1e-9);
  }
}

TEST(Exponential, PenaltySumGivesProductOfLocalReflections) {
  const int m = 3;
  const auto e = taylor_exponential(std::numbers::pi * logic_hamiltonian(m), 80);
  const auto prod = local_reflection_product(m);
  EXPECT_LT(max_abs_diff(e, prod), 1e-9);
}

TEST(ClassicalRule, SinglePairRows) {
  auto row = [](int c, int r) { return classical_rule({{c}, {r}, 1}); };
  EXPECT_EQ(row(0, 0).flag_out, 1);
  EXPECT_EQ(row(0, 0).classification, Classification::fully_consistent);
  EXPECT_EQ(row(0, 1).flag_out, 1);
  EXPECT_EQ(row(1, 1).flag_out, 1);
  EXPECT_EQ(row(1, 1).classification, Classification::locally_resolved);
  EXPECT_EQ(row(1, 0).flag_out, 0);
  EXPECT_EQ(row(1, 0).classification, Classification::inconsistency_detected);
}

TEST(ClassicalRule, EveryPairViolated) {
  const auto r = classical_rule({{1, 1, 1}, {0, 0, 0}, 1});
  EXPECT_EQ(r.classification, Classification::fully_inconsistent);
  EXPECT_EQ(r.flag_out, 0);
  EXPECT_EQ(r.violations, 3);
  const auto partial = classical_rule({{1, 1, 0}, {0, 0, 0}, 1});
  EXPECT_EQ(partial.classification, Classification::inconsistency_detected);
  EXPECT_EQ(classical_rule({{0}, {0}, 0}).flag_out, 0);
  EXPECT_ANY_THROW(classical_rule({{1, 0}, {0}, 1}));
  EXPECT_ANY_THROW(classical_rule({{2}, {0}, 1}));
}

TEST(ClassicalAssignment, BasisIndexRoundTrip) {
  for (int m = 1; m <= 3; ++m) {
    for (std::uint64_t x = 0; x < (1u << (2 * m + 1)); ++x) {
      EXPECT_EQ(ClassicalAssignment::from_basis_index(x, m).basis_index(), x);
    }
  }
}

TEST(Cascade, OrModeMatchesClassicalRuleExhaustively) {
  for (int m = 1; m <= 3; ++m) {
    const auto layout = PairLayout::standard(m);
    const Circuit c = build_general(layout, {CascadeMode::or_accumulate});
    for (std::uint64_t x = 0; x < (1u << (2 * m + 1)); ++x) {
      const auto a = ClassicalAssignment::from_basis_index(x, m);
      EXPECT_EQ(circuit_flag_output(c, layout, a), classical_rule(a).flag_out) << "m=" << m << " x=" << x;
    }
  }
}

TEST(Cascade, ParityDivergesExactlyOnEvenViolationCounts) {
  for (int m = 1; m <= 4; ++m) {
    const auto layout = PairLayout::standard(m);
    const Circuit c = build_general(layout, {CascadeMode::parity});
    for (std::uint64_t x = 0; x < (1u << (2 * m + 1)); ++x) {
      const auto a = ClassicalAssignment::from_basis_index(x, m);
      const int v = a.violations();
      const bool diverges = circuit_flag_output(c, layout, a) != classical_rule(a).flag_out;
      EXPECT_EQ(diverges, v > 0 && v % 2 == 0) << "m=" << m << " x=" << x;
      EXPECT_EQ(circuit_flag_output(c, layout, a), a.flag_in ^ (v % 2));
    }
  }
}

TEST(Cascade, TwoPairWitness) {
  const auto layout = PairLayout::standard(2);
  const ClassicalAssignment a{{1, 1}, {0, 0}, 1};
  EXPECT_EQ(classical_rule(a).flag_out, 0);
  EXPECT_EQ(circuit_flag_output(build_general(layout), layout, a), 1);
}

TEST(FixedPoints, ReflectionFixedSetIsTheKernel) {
  for (int m = 1; m <= 4; ++m) {
    const auto r = fixed_point_report(m);
    EXPECT_TRUE(r.basis_sets_equal);
    EXPECT_EQ(r.reflection_fixed_basis, r.kernel_basis);
    EXPECT_EQ(r.reflection_plus_dimension, static_cast<int>(std::pow(3, m)));
    EXPECT_EQ(r.kernel_dimension, r.reflection_plus_dimension);
    EXPECT_LT(r.eigenspace_deviation, 1e-9);
  }
}

TEST(FixedPoints, CascadeFixesTheClaimedSetAndMore) {
  const auto r = fixed_point_report(1);
  EXPECT_TRUE(r.claimed_not_fixed.empty());
  EXPECT_EQ(r.claimed_dimension, 3);
  EXPECT_EQ(r.fixed_not_claimed.size(), 3u);
  EXPECT_EQ(r.cascade_fixed_dimension, 7);
}

TEST(IdentitySuite, PassesForOneToFourPairs) {
  for (int m = 1; m <= 4; ++m) {
    const auto s = run_identity_suite(m);
    EXPECT_TRUE(s.all_passed()) << m;
    EXPECT_LT(s.max_deviation(), 1e-9);
    for (const auto& d : s.divergences) {
      EXPECT_GE(d.violations, 2);
      EXPECT_EQ(d.violations % 2, 0);
    }
  }
  EXPECT_TRUE(run_identity_suite(1).divergences.empty());
  EXPECT_FALSE(run_identity_suite(2).divergences.empty());
  EXPECT_ANY_THROW(run_identity_suite(kMaxDensePairs + 1));
}

TEST(DenseOperator, RejectsBadDimensions) {
  EXPECT_ANY_THROW(DenseOperator::identity(3));
  EXPECT_ANY_THROW(DenseOperator::identity(2048));
  EXPECT_ANY_THROW(taylor_exponential(DenseOperator::identity(2), 5));
}

}  // namespace
}  // namespace coherence
