#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ccmo/chance.hpp"
#include "ccmo/instance.hpp"
#include "ccmo/objectives.hpp"

namespace ccmo {

// Item indices sorted ascending by f_lambda value, ties by index. lambda 1
// uses the lexicographic (mu, var) order, lambda 0 the lexicographic
// (var, mu) order.
std::vector<int> greedy_order(const StochasticInstance&, double lambda);

// Optimal solution with exactly k elements for f_lambda: the first k items of
// greedy_order.
Solution greedy_optimum(const StochasticInstance&, int k, double lambda);

// Greedy optima for every k in 0..n and every lambda interval midpoint plus
// the two lexicographic endpoints. Stored as one item order plus prefix-sum
// aggregates per lambda; solutions materialize on demand.
class ExtremeSet {
 public:
  int n() const { return n_; }
  std::size_t lambda_count() const { return lambdas_.size(); }
  double lambda_at(std::size_t li) const { return lambdas_[li]; }

  double mu_at(int k, std::size_t li) const { return prefix_mu_[li][static_cast<std::size_t>(k)]; }
  double v_at(int k, std::size_t li) const { return prefix_v_[li][static_cast<std::size_t>(k)]; }
  Solution solution_at(int k, std::size_t li) const;

  struct MinWeight {
    Solution x;
    double mu = 0.0;
    double v = 0.0;
    double w_hat = 0.0;
  };

  // argmin of w_hat over the stored solutions with at least k elements. Along
  // any greedy order both aggregates strictly grow with prefix length, so the
  // k-slice alone is scanned. The reported aggregates are recomputed in
  // canonical index order.
  std::optional<MinWeight> min_weight(const ConfidenceLevel&, int k) const;

  // x_alpha^k for k = 0..n, as evaluated solutions under the cardinality
  // constraint.
  std::vector<EvaluatedSolution> min_weight_family(const ConfidenceLevel&) const;

  friend ExtremeSet build_extreme_set(const StochasticInstance&);

 private:
  const StochasticInstance* instance_ = nullptr;
  int n_ = 0;
  std::vector<double> lambdas_;
  std::vector<std::vector<int>> orders_;
  std::vector<std::vector<double>> prefix_mu_;  // per lambda, length n+1
  std::vector<std::vector<double>> prefix_v_;
};

// The instance must outlive the returned set.
ExtremeSet build_extreme_set(const StochasticInstance&);

// All 2^n solutions reduced to the maximal set under dominates_3d, one
// witness per distinct vector (the last in counting order). Guarded to
// n <= 24.
std::vector<EvaluatedSolution> exhaustive_front(const StochasticInstance&,
                                                const ConstraintFunction&);

struct ExtractionResult {
  Solution x;
  double mu = 0.0;
  double v = 0.0;
  int c = 0;
  double w_hat = 0.0;
};

// argmin w_hat among entries with c >= k; ties by fewer set bits, then
// lexicographic bit string. Empty optional when no entry qualifies.
std::optional<ExtractionResult> extract_min_weight(std::span<const EvaluatedSolution>,
                                                   const ConfidenceLevel&, int k);

// argmax c among entries with w_hat <= budget; ties by smaller w_hat, then
// fewer set bits, then lexicographic. budget must be >= 0.
std::optional<ExtractionResult> extract_max_c(std::span<const EvaluatedSolution>,
                                              const ConfidenceLevel&, double budget);

// Probing grid for budget queries: the distinct values sorted plus the
// midpoints between consecutive ones — one probe inside every answer regime.
std::vector<double> b_probe_grid(std::span<const double> w_values);

}  // namespace ccmo
