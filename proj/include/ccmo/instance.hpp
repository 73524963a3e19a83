#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "ccmo/rng.hpp"
#include "ccmo/solution.hpp"

namespace ccmo {

// n items with independent Normal(mu_i, var_i) weights. Standing assumption
// mu_i >= 1 and var_i >= 1, enforced at construction. Immutable afterwards.
class StochasticInstance {
 public:
  static StochasticInstance create(std::vector<double> mu, std::vector<double> var);

  int n() const { return static_cast<int>(mu_.size()); }
  double mu(int i) const { return mu_[static_cast<std::size_t>(i)]; }
  double var(int i) const { return var_[static_cast<std::size_t>(i)]; }
  std::span<const double> mu() const { return mu_; }
  std::span<const double> var() const { return var_; }

  double mu_total() const { return mu_total_; }
  double var_total() const { return var_total_; }
  double mu_max() const;
  double var_max() const;

 private:
  StochasticInstance() = default;
  std::vector<double> mu_;
  std::vector<double> var_;
  double mu_total_ = 0.0;
  double var_total_ = 0.0;
};

// mu(x) and v(x): sums over selected items in ascending index order (the
// canonical summation order used everywhere, so equal selections produce
// bit-identical values).
double expected_weight(const StochasticInstance&, const Solution&);
double weight_variance(const StochasticInstance&, const Solution&);

enum class WeightSetting { uniform, uniform_fixed, degree_based };

std::string_view to_string(WeightSetting);
WeightSetting parse_weight_setting(std::string_view);

// Draw order, ascending item index: uniform draws mu then var per item;
// uniform-fixed draws mu only (var pinned to 2n^2); degree-based draws var
// only (mu = (n+deg)^5/n^4). `degrees` is consulted only by degree-based but
// must always have length n.
StochasticInstance generate_weights(WeightSetting, std::span<const int> degrees, int n, Rng&);

// Text format: line 1 is n, then n lines "mu_i var_i" (single space, shortest
// round-trip decimals). load(save(x)) == x bit-exactly.
StochasticInstance load_instance(const std::filesystem::path&);
void save_instance(const StochasticInstance&, const std::filesystem::path&);

}  // namespace ccmo
