#pragma once

#include "ccmo/graph.hpp"
#include "ccmo/instance.hpp"
#include "ccmo/solution.hpp"

namespace ccmo {

struct ObjectiveVector2D {
  double mu_hat = 0.0;
  double v_hat = 0.0;
  friend bool operator==(const ObjectiveVector2D&, const ObjectiveVector2D&) = default;
};

// c stays integral so equality in the third coordinate is exact.
struct ObjectiveVector3D {
  double mu = 0.0;
  double v = 0.0;
  int c = 0;
  friend bool operator==(const ObjectiveVector3D&, const ObjectiveVector3D&) = default;
};

// strong: dominates and differs somewhere; weak: equal vectors; none:
// incomparable or worse. Comparisons are exact — the archive's retention rule
// depends on exact vector equality.
enum class Dominance { strong, weak, none };

// Both components minimized.
inline Dominance dominates_2d(const ObjectiveVector2D& a, const ObjectiveVector2D& b) {
  if (a.mu_hat <= b.mu_hat && a.v_hat <= b.v_hat)
    return a == b ? Dominance::weak : Dominance::strong;
  return Dominance::none;
}

// mu and v minimized, c maximized.
inline Dominance dominates_3d(const ObjectiveVector3D& a, const ObjectiveVector3D& b) {
  if (a.mu <= b.mu && a.v <= b.v && a.c >= b.c)
    return a == b ? Dominance::weak : Dominance::strong;
  return Dominance::none;
}

// Constraint value c(x): the cardinality |x|_1, or the number of graph nodes
// dominated by the selection. Read-only after construction; the referenced
// graph must outlive the function.
class ConstraintFunction {
 public:
  enum class Kind { cardinality, domination };

  static ConstraintFunction cardinality() { return ConstraintFunction(Kind::cardinality, nullptr); }
  static ConstraintFunction domination(const Graph& g) {
    return ConstraintFunction(Kind::domination, &g);
  }

  Kind kind() const { return kind_; }
  const Graph* graph() const { return graph_; }

  int value(const Solution& x) const;

  // Largest attainable c over n items (n itself for both kinds; domination
  // additionally requires n to match the graph).
  int max_value(int n) const;

 private:
  ConstraintFunction(Kind kind, const Graph* graph) : kind_(kind), graph_(graph) {}
  Kind kind_;
  const Graph* graph_;
};

// Penalized bi-objective evaluation: plain sums when c(x) >= k, otherwise
// ((k-c)*(1+sum mu), (k-c)*(1+sum var)).
ObjectiveVector2D eval_2d(const StochasticInstance&, const Solution&, int k,
                          const ConstraintFunction&);

// (mu(x), v(x), c(x)) with no penalty component.
ObjectiveVector3D eval_3d(const StochasticInstance&, const Solution&, const ConstraintFunction&);

// A solution with its raw aggregates — the normalized currency between
// archives, extraction operators and the oracles.
struct EvaluatedSolution {
  Solution x;
  double mu = 0.0;
  double v = 0.0;
  int c = 0;
};

}  // namespace ccmo
