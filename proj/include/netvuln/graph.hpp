#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_set>
#include <vector>

namespace netvuln {

using NodeId = std::uint32_t;

/// Unordered node pair, stored with u < v.
struct EdgeId {
  NodeId u = 0;
  NodeId v = 0;

  /// Normalizes endpoint order. Does not reject u == v; Graph does that.
  static constexpr EdgeId of(NodeId a, NodeId b) noexcept {
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
  }

  constexpr std::uint64_t key() const noexcept {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// (N, E, hash of the sorted edge set). Two graphs with equal fingerprints
/// are treated as the same graph by the attack executors.
struct GraphFingerprint {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t hash = 0;

  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

/// Undirected simple graph on dense node ids 0..N-1.
///
/// Nodes are never deleted. Edges can be added and removed; a removed edge
/// leaves both endpoints in place, so N stays fixed for the lifetime of the
/// value. Const member functions are safe to call concurrently.
class Graph {
 public:
  /// Throws ValidationError when node_count == 0.
  explicit Graph(std::size_t node_count);

  /// Builds a graph from an edge list. Self-loops, duplicates and
  /// out-of-range endpoints raise ValidationError.
  static Graph from_edges(std::size_t node_count, std::span<const EdgeId> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_keys_.size(); }

  /// Adds {a, b}. Throws ValidationError on a self-loop, an existing edge or
  /// an unknown endpoint.
  void add_edge(NodeId a, NodeId b);

  /// Returns false when the edge is not present.
  bool remove_edge(EdgeId e);

  bool has_edge(EdgeId e) const noexcept;
  bool contains(NodeId n) const noexcept { return n < adjacency_.size(); }

  std::span<const NodeId> neighbors(NodeId n) const { return adjacency_.at(n); }
  std::size_t degree(NodeId n) const { return adjacency_.at(n).size(); }

  /// Live edges incident to n, normalized and sorted.
  std::vector<EdgeId> incident_edges(NodeId n) const;

  /// All live edges, sorted.
  std::vector<EdgeId> edges() const;

  GraphFingerprint fingerprint() const;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

}  // namespace netvuln

template <>
struct std::hash<netvuln::EdgeId> {
  std::size_t operator()(const netvuln::EdgeId& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.key());
  }
};
