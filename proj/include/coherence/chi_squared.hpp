#pragma once

namespace coherence {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
/// Series for x < a + 1, Lentz continued fraction otherwise.
double regularized_gamma_q(double a, double x);

/// P(X >= statistic) for X ~ chi^2 with `dof` degrees of freedom.
/// dof = 0 is the degenerate distribution at 0, so the result is 1.
double chi_squared_survival(double statistic, int dof);

}  // namespace coherence
