#pragma once

#include <span>

namespace ccmo {

// Two-sided Mann-Whitney U with midrank ties. Samples must be non-empty.

// U statistic of the first sample.
double mann_whitney_u_statistic(std::span<const double> a, std::span<const double> b);

// Exact permutation p-value. Counts subsets of the pooled sample by rank sum
// over doubled midranks (integer-exact, equivalent to enumerating all
// C(n+m, n) group assignments). Combined size capped at 40.
double mann_whitney_p_exact(std::span<const double> a, std::span<const double> b);

// Normal approximation with tie correction and 0.5 continuity correction.
double mann_whitney_p_normal(std::span<const double> a, std::span<const double> b);

// Exact path when the combined size is at most 20, Normal approximation
// otherwise.
double mann_whitney_p(std::span<const double> a, std::span<const double> b);

}  // namespace ccmo
