#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ccmo/rng.hpp"
#include "ccmo/solution.hpp"

namespace ccmo {

// Simple undirected graph. CSR adjacency with sorted neighbor lists; no
// self-loops, no duplicate edges. Immutable after construction.
class Graph {
 public:
  // Normalizes the edge list: self-loops and repeated edges (either
  // orientation) are dropped and counted.
  static Graph from_edges(int node_count, std::vector<std::pair<int, int>> edges,
                          int* dropped_self_loops = nullptr, int* dropped_duplicates = nullptr);

  int node_count() const { return node_count_; }
  std::int64_t edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int u) const {
    const auto lo = offsets_[static_cast<std::size_t>(u)];
    const auto hi = offsets_[static_cast<std::size_t>(u) + 1];
    return {adjacency_.data() + lo, adjacency_.data() + hi};
  }

  int degree(int u) const {
    return static_cast<int>(offsets_[static_cast<std::size_t>(u) + 1] -
                            offsets_[static_cast<std::size_t>(u)]);
  }

  const std::vector<int>& degrees() const { return degrees_; }

 private:
  Graph() = default;
  int node_count_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<int> adjacency_;
  std::vector<int> degrees_;
};

enum class IndexBase { zero, one };

struct EdgeListStats {
  int dropped_self_loops = 0;
  int dropped_duplicates = 0;
};

// Whitespace-separated "u v" lines; lines starting with '%' or '#' are
// ignored. node_count overrides the max-index inference (required for
// trailing isolated nodes or empty files).
Graph load_edge_list(const std::filesystem::path&, IndexBase,
                     std::optional<int> node_count = std::nullopt,
                     EdgeListStats* stats = nullptr);

void save_edge_list(const Graph&, const std::filesystem::path&, IndexBase);

// Number of nodes either selected by x or adjacent to a selected node.
// |x| must equal node_count.
int domination_count(const Graph&, const Solution&);

// Configuration-model d-regular graph; resamples the whole pairing until it
// is simple. Requires n*d even and d < n.
Graph random_regular(int n, int d, Rng&);

// G(n,p); pairs (u,v), u<v, probed in ascending order.
Graph erdos_renyi(int n, double p, Rng&);

}  // namespace ccmo
