#pragma once

#include <vector>

#include "ccmo/instance.hpp"
#include "ccmo/solution.hpp"

namespace ccmo {

// Inverse standard Normal CDF. Rational initial approximation refined by two
// Halley steps against the erfc-based CDF, with the residual formed on the
// near tail so it stays well-conditioned for alpha close to 0 or 1. Absolute
// error below 1e-13 throughout (0,1). Throws std::domain_error outside (0,1).
double normal_quantile(double alpha);

// Standard Normal CDF, 0.5*erfc(-x/sqrt(2)).
double normal_cdf(double x);

// Upper tail Q(x) = 1 - Phi(x) = 0.5*erfc(x/sqrt(2)); accurate where Phi
// saturates.
double normal_tail(double x);

// Confidence level alpha in [0.5, 1) with its cached quantile K_alpha.
struct ConfidenceLevel {
  double alpha = 0.5;
  double k_alpha = 0.0;

  static ConfidenceLevel from_alpha(double alpha);
  // alpha = 1 - beta, beta in (0, 0.5].
  static ConfidenceLevel from_beta(double beta);
};

// w_hat(x) = mu(x) + K_alpha * sqrt(v(x)).
double chance_value(double mu, double v, const ConfidenceLevel&);
double chance_value(const StochasticInstance&, const Solution&, const ConfidenceLevel&);

// f_lambda(x) = lambda*mu(x) + (1-lambda)*v(x); lambda in [0,1] or
// std::domain_error.
double f_lambda(const StochasticInstance&, const Solution&, double lambda);
// Element form on a single item index.
double f_lambda_item(const StochasticInstance&, int item, double lambda);

// The lambda values where the f_lambda item order can change, 0 and 1
// prepended/appended, plus the interval midpoints. Breakpoints closer than
// 1e-12*max(1,|lambda|) are merged.
struct LambdaBreakpoints {
  std::vector<double> values;     // sorted, deduplicated; front()==0, back()==1
  std::vector<double> midpoints;  // (values[i]+values[i+1])/2, one per interval
};

LambdaBreakpoints lambda_breakpoints(const StochasticInstance&);

}  // namespace ccmo
