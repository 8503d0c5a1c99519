#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netvuln/graph.hpp"

namespace netvuln {

/// Node count of the largest connected component (BFS). Isolated nodes are
/// components of size 1, so the result is at least 1.
std::size_t giant_component_size(const Graph& g);

/// Same quantity computed with a disjoint-set forest.
std::size_t giant_component_size_union_find(const Graph& g);

/// Disjoint-set forest with union by size and path halving. Tracks the
/// largest set size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false if a and b were already in the same set.
  bool unite(std::size_t a, std::size_t b);

  std::size_t set_size(std::size_t x) { return size_[find(x)]; }
  std::size_t largest() const noexcept { return largest_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t largest_;
};

/// Giant-component sizes while removing `order` from g one edge at a time:
/// element i is the size after the first i removals (i = 0..order.size()).
///
/// Runs in reverse: starting from g minus every edge in `order`, edges are
/// added back last-removed-first with union-find and the running maximum is
/// recorded, then the record is reversed. Edges of g absent from `order`
/// stay present throughout. Throws IntegrityError if an edge of `order` is
/// not in g or repeats.
std::vector<std::size_t> giant_component_profile(const Graph& g, std::span<const EdgeId> order);

/// Reference implementation of giant_component_profile: mutates a copy of g
/// and runs a BFS after every removal. O(|order| * (N + E)).
std::vector<std::size_t> giant_component_profile_bfs(const Graph& g,
                                                     std::span<const EdgeId> order);

}  // namespace netvuln
