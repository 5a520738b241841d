#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "coherence/distribution.hpp"

namespace coherence {

using OutcomeSet = std::set<std::uint64_t>;

/// Sum of p(x) over `consistent_set`.
double consistency_fidelity(const Distribution& dist, const OutcomeSet& consistent_set);

/// (1/2) sum_x |p(x) - q(x)| over the union of supports.
double tv_distance(const Distribution& p, const Distribution& q);

/// 1 - paradox mass(exp) / paradox mass(ideal); nullopt when the ideal
/// paradox mass is below 1e-12.
std::optional<double> interference_suppression(const Distribution& experimental,
                                               const Distribution& ideal,
                                               const OutcomeSet& paradox_set);

struct ChiSquaredResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  int bins = 0;         // after pooling
  int pooled_bins = 0;  // original bins merged into the residual bin
};

/// Bins with expected count below this are pooled.
inline constexpr double kMinExpectedCount = 5.0;

/// Pearson goodness of fit of `observed` counts against `expected`
/// probabilities (renormalized over their listed mass).
///
/// Bins with E < 5 form one residual bin; if that bin still has E < 5 it is
/// merged into the regular bin with the smallest E. dof = bins - 1.
ChiSquaredResult chi_squared_gof(const Distribution& observed, const Distribution& expected);

/// P(flag = 0) - P(flag = 1).
double z_flag(const Distribution& dist, int flag_index);

struct MetricsConfig {
  OutcomeSet consistent_set;
  /// Defaults to the complement of consistent_set when absent.
  std::optional<OutcomeSet> paradox_set;
  int flag_index = 3;
};

struct MetricsReport {
  int width = 0;
  double f_c_experimental = 0.0;
  double f_c_reference = 0.0;
  double d_tv = 0.0;
  std::optional<double> r_i;
  std::optional<ChiSquaredResult> chi2;  // requires counts on the experimental side
  double z_flag = 0.0;
  OutcomeSet consistent_set;
  OutcomeSet paradox_set;
  int flag_index = 0;
  double experimental_unassigned_mass = 0.0;
  double reference_unassigned_mass = 0.0;
};

MetricsReport full_report(const Distribution& experimental, const Distribution& ideal,
                          const MetricsConfig& config);

}  // namespace coherence
