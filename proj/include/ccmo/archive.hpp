#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "ccmo/objectives.hpp"
#include "ccmo/rng.hpp"
#include "ccmo/solution.hpp"

namespace ccmo {

// GSEMO population archives: one solution per non-dominated objective vector.
// try_insert implements the Algorithm-1 acceptance rule: reject iff some
// member strongly dominates the candidate; otherwise remove every member the
// candidate weakly dominates (an equal-vector incumbent is replaced by the
// newcomer) and insert.
//
// Members are kept in a canonical order (2D: mu_hat ascending; 3D: c
// ascending, then mu ascending) so uniform sampling by index is independent
// of the internal layout.

struct Entry2D {
  Solution x;
  ObjectiveVector2D f;
};

struct Entry3D {
  Solution x;
  ObjectiveVector3D f;
};

class ParetoArchive2D {
 public:
  bool try_insert(const Solution& x, ObjectiveVector2D f);

  const Entry2D& sample_uniform(Rng& rng) const {
    if (members_.empty()) throw std::logic_error("ParetoArchive2D: sample from empty archive");
    return members_[rng.uniform_index(members_.size())];
  }

  std::size_t size() const { return members_.size(); }
  std::size_t max_size_seen() const { return max_size_seen_; }
  std::span<const Entry2D> members() const { return members_; }

 private:
  std::vector<Entry2D> members_;  // sorted by (mu_hat, v_hat)
  std::size_t max_size_seen_ = 0;
};

// Indexed on the integral c coordinate: bucket c holds its members sorted by
// mu ascending, which forces v strictly descending, so dominance probes are a
// binary search per bucket and removals erase one contiguous range.
class ParetoArchive3D {
 public:
  explicit ParetoArchive3D(int c_max) : buckets_(static_cast<std::size_t>(c_max) + 1) {}

  bool try_insert(const Solution& x, ObjectiveVector3D f);

  const Entry3D& sample_uniform(Rng& rng) const {
    if (size_ == 0) throw std::logic_error("ParetoArchive3D: sample from empty archive");
    return at(rng.uniform_index(size_));
  }

  // Canonical index: buckets ascending by c, then mu ascending.
  const Entry3D& at(std::size_t index) const;

  std::size_t size() const { return size_; }
  std::size_t max_size_seen() const { return max_size_seen_; }
  int c_max() const { return static_cast<int>(buckets_.size()) - 1; }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& bucket : buckets_)
      for (const auto& entry : bucket) f(entry);
  }

  std::vector<Entry3D> members() const;

 private:
  std::vector<std::vector<Entry3D>> buckets_;
  std::size_t size_ = 0;
  std::size_t max_size_seen_ = 0;
};

}  // namespace ccmo
