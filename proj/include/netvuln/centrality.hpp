#pragma once

#include <string_view>
#include <vector>

#include "netvuln/graph.hpp"

namespace netvuln {

enum class CentralityKind { node_degree, node_betweenness, edge_degree, edge_betweenness };

std::string_view to_string(CentralityKind kind);

constexpr bool is_edge_kind(CentralityKind kind) noexcept {
  return kind == CentralityKind::edge_degree || kind == CentralityKind::edge_betweenness;
}

/// One non-negative score per node (node kinds, indexed by NodeId) or per
/// edge (edge kinds, aligned with `edges`, which is sorted).
struct CentralityVector {
  CentralityKind kind = CentralityKind::node_degree;
  std::vector<EdgeId> edges;
  std::vector<double> values;

  double of(NodeId n) const;
  /// Throws std::out_of_range for an edge not in `edges`.
  double of(EdgeId e) const;
};

CentralityVector node_degree(const Graph& g);

/// deg(u) * deg(v) for every edge.
CentralityVector edge_degree(const Graph& g);

// Betweenness counts ordered source/target pairs with fractional credit when
// several shortest paths exist (Brandes accumulation over unweighted BFS).
// Unordered-pair conventions are exactly half of these values.

CentralityVector node_betweenness(const Graph& g);
CentralityVector edge_betweenness(const Graph& g);

CentralityVector compute_centrality(const Graph& g, CentralityKind kind);

}  // namespace netvuln
