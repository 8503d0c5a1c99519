#include "netvuln/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "netvuln/errors.hpp"
#include "netvuln/rng.hpp"

namespace netvuln {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {
  if (node_count == 0) throw ValidationError("graph must have at least one node");
  if (node_count > std::numeric_limits<NodeId>::max())
    throw ValidationError("node count exceeds the NodeId range");
}

Graph Graph::from_edges(std::size_t node_count, std::span<const EdgeId> edges) {
  Graph g(node_count);
  g.edge_keys_.reserve(edges.size());
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::add_edge(NodeId a, NodeId b) {
  if (!contains(a) || !contains(b))
    throw ValidationError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") references an unknown node");
  if (a == b) throw ValidationError("self-loop on node " + std::to_string(a));
  if (!edge_keys_.insert(EdgeId::of(a, b).key()).second)
    throw ValidationError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

bool Graph::remove_edge(EdgeId e) {
  if (edge_keys_.erase(e.key()) == 0) return false;
  auto drop = [](std::vector<NodeId>& list, NodeId x) {
    auto it = std::find(list.begin(), list.end(), x);
    *it = list.back();
    list.pop_back();
  };
  drop(adjacency_[e.u], e.v);
  drop(adjacency_[e.v], e.u);
  return true;
}

bool Graph::has_edge(EdgeId e) const noexcept { return edge_keys_.contains(e.key()); }

std::vector<EdgeId> Graph::incident_edges(NodeId n) const {
  std::vector<EdgeId> out;
  out.reserve(degree(n));
  for (NodeId m : adjacency_.at(n)) out.push_back(EdgeId::of(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edge_keys_.size());
  for (NodeId u = 0; u < adjacency_.size(); ++u)
    for (NodeId v : adjacency_[u])
      if (u < v) out.push_back({u, v});
  std::sort(out.begin(), out.end());
  return out;
}

GraphFingerprint Graph::fingerprint() const {
  std::uint64_t h = mix64(node_count());
  for (const auto& e : edges()) h = mix64(h ^ e.key());
  return {node_count(), edge_count(), h};
}

}  // namespace netvuln
