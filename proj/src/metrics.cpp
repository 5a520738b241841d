#include "coherence/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "coherence/chi_squared.hpp"

namespace coherence {

namespace {

void check_width(const Distribution& a, const Distribution& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("distribution widths differ: " + std::to_string(a.width()) +
                                " vs " + std::to_string(b.width()));
  }
}

void check_set(const OutcomeSet& set, int width) {
  for (auto x : set) {
    if (x >> width) {
      throw std::invalid_argument("outcome set member exceeds distribution width " +
                                  std::to_string(width));
    }
  }
}

double mass(const Distribution& d, const OutcomeSet& set) {
  double m = 0.0;
  for (auto x : set) m += d.probability(x);
  return m;
}

}  // namespace

double consistency_fidelity(const Distribution& dist, const OutcomeSet& consistent_set) {
  check_set(consistent_set, dist.width());
  return mass(dist, consistent_set);
}

double tv_distance(const Distribution& p, const Distribution& q) {
  check_width(p, q);
  double sum = 0.0;
  for (auto x : Distribution::joint_support(p, q)) sum += std::abs(p.probability(x) - q.probability(x));
  return 0.5 * sum;
}

std::optional<double> interference_suppression(const Distribution& experimental,
                                               const Distribution& ideal,
                                               const OutcomeSet& paradox_set) {
  check_width(experimental, ideal);
  check_set(paradox_set, ideal.width());
  const double ideal_mass = mass(ideal, paradox_set);
  if (ideal_mass < 1e-12) return std::nullopt;
  return 1.0 - mass(experimental, paradox_set) / ideal_mass;
}

ChiSquaredResult chi_squared_gof(const Distribution& observed, const Distribution& expected) {
  check_width(observed, expected);
  if (!observed.is_counts()) throw std::invalid_argument("chi-squared needs observed counts");
  if (observed.total_shots() == 0) throw std::invalid_argument("observed counts total zero shots");

  double expected_mass = 0.0;
  for (const auto& [x, _] : expected.entries()) expected_mass += expected.probability(x);
  if (expected_mass <= 0.0) throw std::invalid_argument("expected distribution has empty support");

  const double shots = static_cast<double>(observed.total_shots());
  struct Bin {
    double observed = 0.0;
    double expected = 0.0;
  };
  std::vector<Bin> regular;
  Bin residual;
  ChiSquaredResult out;

  for (auto x : Distribution::joint_support(observed, expected)) {
    const Bin b{observed.raw(x), expected.probability(x) / expected_mass * shots};
    if (b.expected < kMinExpectedCount) {
      residual.observed += b.observed;
      residual.expected += b.expected;
      ++out.pooled_bins;
    } else {
      regular.push_back(b);
    }
  }
  if (out.pooled_bins > 0) {
    if (residual.expected >= kMinExpectedCount || regular.empty()) {
      regular.push_back(residual);
    } else {
      auto smallest = std::min_element(regular.begin(), regular.end(),
                                       [](const Bin& a, const Bin& b) { return a.expected < b.expected; });
      smallest->observed += residual.observed;
      smallest->expected += residual.expected;
    }
  }

  for (const auto& b : regular) {
    if (b.expected > 0.0) {
      out.statistic += (b.observed - b.expected) * (b.observed - b.expected) / b.expected;
    } else if (b.observed > 0.0) {
      out.statistic = std::numeric_limits<double>::infinity();
    }
  }
  out.bins = static_cast<int>(regular.size());
  out.dof = std::max(0, out.bins - 1);
  out.p_value = std::isinf(out.statistic) ? 0.0 : chi_squared_survival(out.statistic, out.dof);
  return out;
}

double z_flag(const Distribution& dist, int flag_index) {
  if (flag_index < 0 || flag_index >= dist.width()) {
    throw std::out_of_range("flag index " + std::to_string(flag_index) + " outside width " +
                            std::to_string(dist.width()));
  }
  double p0 = 0.0;
  double p1 = 0.0;
  for (const auto& [x, _] : dist.entries()) {
    const double p = dist.probability(x);
    ((x >> flag_index) & 1U ? p1 : p0) += p;
  }
  return p0 - p1;
}

MetricsReport full_report(const Distribution& experimental, const Distribution& ideal,
                          const MetricsConfig& config) {
  check_width(experimental, ideal);
  const int width = experimental.width();
  check_set(config.consistent_set, width);

  MetricsReport r;
  r.width = width;
  r.consistent_set = config.consistent_set;
  r.paradox_set = config.paradox_set ? *config.paradox_set : complement_set(config.consistent_set, width);
  r.flag_index = config.flag_index;
  r.f_c_experimental = consistency_fidelity(experimental, r.consistent_set);
  r.f_c_reference = consistency_fidelity(ideal, r.consistent_set);
  r.d_tv = tv_distance(experimental, ideal);
  r.r_i = interference_suppression(experimental, ideal, r.paradox_set);
  if (experimental.is_counts()) r.chi2 = chi_squared_gof(experimental, ideal);
  r.z_flag = z_flag(experimental, config.flag_index);
  r.experimental_unassigned_mass = experimental.unassigned_mass();
  r.reference_unassigned_mass = ideal.unassigned_mass();
  return r;
}

}  // namespace coherence
