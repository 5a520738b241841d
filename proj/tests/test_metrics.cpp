#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "coherence/chi_squared.hpp"
#include "coherence/counts_io.hpp"
#include "coherence/errors.hpp"
#include "coherence/metrics.hpp"

namespace coherence {
namespace {

const std::string kData = COHERENCE_DATA_DIR;

// Upper tail of the chi-squared density by composite Simpson's rule in u = sqrt(x).
double chi2_tail_by_quadrature(double stat, int k) {
  const double norm = std::pow(2.0, k / 2.0) * std::tgamma(k / 2.0);
  auto g = [&](double u) { return 2.0 * std::pow(u, k - 1) * std::exp(-u * u / 2.0) / norm; };
  const double a = std::sqrt(stat);
  const double b = a + std::sqrt(static_cast<double>(k)) + 40.0;
  const int n = 40000;
  const double h = (b - a) / n;
  double sum = g(a) + g(b);
  for (int i = 1; i < n; ++i) sum += g(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

TEST(ChiSquared, SurvivalAgreesWithQuadratureOnGrid) {
  const std::pair<int, double> grid[] = {
      {1, 3.841}, {1, 0.1},  {1, 1.0},   {1, 6.635}, {2, 0.5},   {2, 5.991}, {3, 2.0},
      {3, 7.815}, {4, 1.0},  {4, 9.488}, {5, 3.0},   {5, 11.07}, {7, 14.07}, {9, 9.0},
      {10, 4.0},  {10, 18.31}, {15, 25.0}, {20, 31.41}, {30, 20.0}, {50, 67.5}};
  for (const auto& [dof, stat] : grid) {
    const double oracle = chi2_tail_by_quadrature(stat, dof);
    EXPECT_NEAR(chi_squared_survival(stat, dof), oracle, 1e-3) << "dof " << dof << " stat " << stat;
    EXPECT_NEAR(chi_squared_survival(stat, dof), oracle, 1e-8) << "dof " << dof << " stat " << stat;
  }
  EXPECT_NEAR(chi_squared_survival(3.841, 1), 0.05, 1e-4);
}

TEST(ChiSquared, EdgeCases) {
  EXPECT_DOUBLE_EQ(chi_squared_survival(0.0, 3), 1.0);
  EXPECT_DOUBLE_EQ(chi_squared_survival(5.0, 0), 1.0);
  EXPECT_NEAR(chi_squared_survival(2.0, 2), std::exp(-1.0), 1e-14);
  EXPECT_NEAR(regularized_gamma_q(1.0, 3.0), std::exp(-3.0), 1e-14);
  EXPECT_ANY_THROW(chi_squared_survival(-1.0, 2));
}

TEST(ChiSquared, IdenticalDistributionHasPValueOne) {
  const auto obs = Distribution::from_counts(2, {{0, 250}, {1, 250}, {2, 250}, {3, 250}});
  const auto r = chi_squared_gof(obs, obs.normalized());
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.dof, 3);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(ChiSquared, HandComputedStatistic) {
  const auto obs = Distribution::from_counts(1, {{0, 60}, {1, 40}});
  const auto exp = Distribution::from_probabilities(1, {{0, 0.5}, {1, 0.5}});
  const auto r = chi_squared_gof(obs, exp);
  EXPECT_NEAR(r.statistic, 4.0, 1e-12);
  EXPECT_EQ(r.dof, 1);
  EXPECT_NEAR(r.p_value, std::erfc(std::sqrt(2.0)), 1e-12);
}

TEST(ChiSquared, SmallBinsArePooled) {
  const auto obs = Distribution::from_counts(2, {{0, 50}, {1, 48}, {2, 1}, {3, 1}});
  const auto exp = Distribution::from_probabilities(2, {{0, 0.49}, {1, 0.49}, {2, 0.01}, {3, 0.01}});
  const auto r = chi_squared_gof(obs, exp);
  EXPECT_EQ(r.pooled_bins, 2);
  EXPECT_EQ(r.bins, 2);
  EXPECT_EQ(r.dof, 1);
  const double e_small = 49.0 + 2.0;
  const double stat = std::pow(50 + 2 - e_small, 2) / e_small + std::pow(48 - 49.0, 2) / 49.0;
  EXPECT_NEAR(r.statistic, stat, 1e-9);
}

TEST(ChiSquared, ResidualBinLargeEnoughStandsAlone) {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::map<std::uint64_t, double> probs;
  for (std::uint64_t x = 0; x < 8; ++x) {
    counts[x] = x < 2 ? 400 : 33;
    probs[x] = x < 2 ? 0.4 : 0.2 / 6.0;
  }
  const auto r = chi_squared_gof(Distribution::from_counts(3, counts), Distribution::from_probabilities(3, probs));
  EXPECT_EQ(r.pooled_bins, 0);
  EXPECT_EQ(r.bins, 8);
}

Distribution random_distribution(std::mt19937_64& gen, int width) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::map<std::uint64_t, double> w;
  double total = 0.0;
  for (std::uint64_t x = 0; x < (1u << width); ++x) {
    if (u(gen) < 0.3) continue;
    const double v = -std::log(1.0 - u(gen));
    w[x] = v;
    total += v;
  }
  if (w.empty()) {
    w[gen() % (1u << width)] = 1.0;
    total = 1.0;
  }
  for (auto& [x, v] : w) v /= total;
  return Distribution::from_probabilities(width, w);
}

TEST(TvDistance, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 gen(20251121);
  for (int i = 0; i < 1000; ++i) {
    const int width = 1 + static_cast<int>(gen() % 5);
    const auto p = random_distribution(gen, width);
    const auto q = random_distribution(gen, width);
    const auto r = random_distribution(gen, width);
    const double pq = tv_distance(p, q);
    EXPECT_NEAR(pq, tv_distance(q, p), 1e-15);
    EXPECT_GE(pq, 0.0);
    EXPECT_LE(pq, 1.0 + 1e-12);
    EXPECT_NEAR(tv_distance(p, p), 0.0, 1e-15);
    EXPECT_LE(pq, tv_distance(p, r) + tv_distance(r, q) + 1e-12);
  }
}

TEST(TvDistance, DisjointSupportsAreAtDistanceOne) {
  const auto a = Distribution::from_probabilities(2, {{0, 1.0}});
  const auto b = Distribution::from_probabilities(2, {{3, 0.5}, {2, 0.5}});
  EXPECT_DOUBLE_EQ(tv_distance(a, b), 1.0);
}

TEST(ConsistencyFidelity, ComplementIdentity) {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_distribution(gen, 4);
    OutcomeSet s;
    for (std::uint64_t x = 0; x < 16; ++x) {
      if (gen() % 2) s.insert(x);
    }
    EXPECT_NEAR(consistency_fidelity(p, s) + consistency_fidelity(p, complement_set(s, 4)), 1.0, 1e-12);
  }
}

TEST(InterferenceSuppression, GuardOnZeroIdealParadoxMass) {
  const auto ideal = Distribution::from_probabilities(4, {{9, 0.5}, {10, 0.5}});
  const auto exp = Distribution::from_probabilities(4, {{9, 0.45}, {10, 0.45}, {0, 0.1}});
  const OutcomeSet paradox = complement_set({9, 10}, 4);
  EXPECT_FALSE(interference_suppression(exp, ideal, paradox).has_value());
  const auto noisy_ideal = Distribution::from_probabilities(4, {{9, 0.4}, {10, 0.4}, {0, 0.2}});
  const auto ri = interference_suppression(exp, noisy_ideal, paradox);
  ASSERT_TRUE(ri.has_value());
  EXPECT_NEAR(*ri, 0.5, 1e-12);
}

TEST(ZFlag, SignConvention) {
  const auto d = Distribution::from_probabilities(4, {{9, 0.5}, {10, 0.25}, {0, 0.25}});
  EXPECT_NEAR(z_flag(d, 3), 0.25 - 0.75, 1e-15);
  EXPECT_THROW(z_flag(d, 4), std::out_of_range);
}

TEST(BundledRuns, ProbabilityColumnsGivePinnedValues) {
  const auto sim = read_distribution_csv(kData + "/liar_simulation_probability.csv");
  const auto hw = read_distribution_csv(kData + "/liar_hardware_probability.csv");
  const auto consistent = parse_outcome_set({"1001", "1010"}, 4);
  EXPECT_NEAR(consistency_fidelity(sim, consistent), 0.8713, 1e-12);
  EXPECT_NEAR(consistency_fidelity(hw, consistent), 0.8614, 1e-12);
  EXPECT_NEAR(tv_distance(sim, hw), 0.03385, 1e-12);
  EXPECT_NEAR(sim.unassigned_mass(), 1.0 - 0.9624, 1e-9);
  EXPECT_NEAR(hw.unassigned_mass(), 1.0 - 0.9445, 1e-9);
}

TEST(BundledRuns, CountColumnsGivePinnedValues) {
  const auto sim = read_distribution_csv(kData + "/liar_simulation_counts.csv");
  const auto hw = read_distribution_csv(kData + "/liar_hardware_counts.csv");
  EXPECT_EQ(sim.total_shots(), 8192u);
  EXPECT_EQ(hw.total_shots(), 8192u);
  const auto consistent = parse_outcome_set({"1001", "1010"}, 4);
  EXPECT_DOUBLE_EQ(consistency_fidelity(sim, consistent), 0.9052734375);
  EXPECT_DOUBLE_EQ(consistency_fidelity(hw, consistent), 0.912109375);
  EXPECT_DOUBLE_EQ(tv_distance(sim, hw), 0.035400390625);
  EXPECT_DOUBLE_EQ(z_flag(hw, 3), -0.98046875);
  EXPECT_DOUBLE_EQ(z_flag(sim, 3), -0.98388671875);
  const auto r = full_report(hw, sim, {consistent, std::nullopt, 3});
  ASSERT_TRUE(r.chi2.has_value());
  EXPECT_GE(r.chi2->p_value, 0.0);
  EXPECT_LE(r.chi2->p_value, 1.0);
}

TEST(CountsIo, ParsesBothHeaders) {
  std::istringstream counts("state,counts\n1001,3\n1010,1\n");
  const auto c = read_distribution_csv(counts, "mem");
  EXPECT_TRUE(c.is_counts());
  EXPECT_DOUBLE_EQ(c.probability(9), 0.75);
  std::istringstream probs("state,probability\n1001,0.5\n1010,0.5\n");
  EXPECT_FALSE(read_distribution_csv(probs, "mem").is_counts());
}

TEST(CountsIo, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_distribution_csv(in, "mem");
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("state,count\n1001,3\n"), 1u);
  EXPECT_EQ(line_of("state,counts\n1001,3\n10x1,2\n"), 3u);
  EXPECT_EQ(line_of("state,counts\n1001,3\n101,2\n"), 3u);
  EXPECT_EQ(line_of("state,counts\n1001,-3\n"), 2u);
  EXPECT_EQ(line_of("state,counts\n1001,3\n1001,2\n"), 3u);
  std::istringstream overfull("state,probability\n1001,0.7\n1010,0.7\n");
  EXPECT_THROW(read_distribution_csv(overfull, "mem"), ParseError);
  EXPECT_THROW(read_distribution_csv(std::filesystem::path("/nonexistent/x.csv")), IoError);
}

TEST(CountsIo, WriteThenReadRoundTrip) {
  const auto d = Distribution::from_counts(3, {{0, 5}, {5, 0}, {7, 11}});
  std::ostringstream out;
  write_counts_csv(out, d);
  EXPECT_EQ(out.str(), "state,counts\n000,5\n111,11\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_distribution_csv(in, "mem").probability(7), d.probability(7));

  const auto p = Distribution::from_probabilities(2, {{1, 1.0 / 3.0}, {2, 2.0 / 3.0}});
  std::ostringstream pout;
  write_probabilities_csv(pout, p);
  std::istringstream pin(pout.str());
  EXPECT_EQ(read_distribution_csv(pin, "mem").probability(1), 1.0 / 3.0);
}

}  // namespace
}  // namespace coherence
