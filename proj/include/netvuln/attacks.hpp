#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netvuln/centrality.hpp"
#include "netvuln/curve.hpp"
#include "netvuln/graph.hpp"

namespace netvuln {

enum class AttackTarget { edge, node };
enum class AttackRule { random, initial_degree, initial_betweenness };

struct Strategy {
  AttackTarget target = AttackTarget::edge;
  AttackRule rule = AttackRule::random;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Canonical order: rn-edge, id-edge, ib-edge, rn-node, id-node, ib-node.
/// The position in this list is the strategy index mixed into trial seeds.
inline constexpr std::array<Strategy, 6> kAllStrategies{{
    {AttackTarget::edge, AttackRule::random},
    {AttackTarget::edge, AttackRule::initial_degree},
    {AttackTarget::edge, AttackRule::initial_betweenness},
    {AttackTarget::node, AttackRule::random},
    {AttackTarget::node, AttackRule::initial_degree},
    {AttackTarget::node, AttackRule::initial_betweenness},
}};

std::size_t strategy_index(Strategy s);
std::string to_string(Strategy s);
/// Parses "rn-edge", "id-node", ... ; throws ParameterError otherwise.
Strategy parse_strategy(std::string_view name);

/// Centrality that ranks targets for a strategy, or nullopt for random.
std::optional<CentralityKind> ranking_centrality(Strategy s);

/// Removal order over every edge or every node of the source graph.
struct AttackPlan {
  Strategy strategy;
  std::vector<EdgeId> edges;  // edge target
  std::vector<NodeId> nodes;  // node target
  /// Ranking score of each unit in plan order (empty for random plans).
  /// Scores within 1e-9 relative of each other are snapped to one value so
  /// floating-point noise in betweenness does not split ties.
  std::vector<double> scores;
  GraphFingerprint source;

  std::size_t size() const { return strategy.target == AttackTarget::edge ? edges.size() : nodes.size(); }
};

/// Random rule: uniform permutation. ID/IB: descending initial centrality,
/// each tie group in uniformly random order (seeded Fisher-Yates, then a
/// stable descending sort). Throws ParameterError for an edgeless graph.
AttackPlan plan_attack(const Graph& g, Strategy strategy, std::uint64_t seed);

/// As above with the ranking centrality supplied by the caller (it must
/// be the one ranking_centrality(strategy) names, computed on g).
AttackPlan plan_attack(const Graph& g, Strategy strategy, std::uint64_t seed,
                       const CentralityVector& ranking);

/// (removed-edge count, giant-component size) pairs.
struct Checkpoint {
  std::size_t removed_edges = 0;
  std::size_t giant = 0;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct RemovalTrace {
  std::vector<Checkpoint> points;
};

/// One checkpoint per single-edge removal, i = 0..E. Throws IntegrityError
/// if the plan was not built for g or is not an edge plan.
RemovalTrace execute_edge_attack(const Graph& g, const AttackPlan& plan);

/// Node plan expanded to an edge order. boundaries[k] is the removed-edge
/// count after the k-th non-empty bundle; nodes whose edges were all taken
/// by earlier bundles contribute nothing.
struct BundleExpansion {
  std::vector<EdgeId> order;
  std::vector<std::size_t> boundaries;
};

/// For each node in plan order, its still-present incident edges in an
/// order drawn from `seed`.
BundleExpansion expand_node_plan(const Graph& g, const AttackPlan& plan, std::uint64_t seed);

/// Node attack as bundles of edge removals. Checkpoints at 0 and at every
/// bundle boundary; removed nodes stay in the graph as isolated nodes so the
/// normalizing N is constant.
RemovalTrace execute_node_attack(const Graph& g, const AttackPlan& plan, std::uint64_t seed);

/// Edge plan that removes each node's bundle one edge at a time, in the
/// node plan's order. Covers all E edges.
AttackPlan node_edge_transfer(const Graph& g, const AttackPlan& node_plan, std::uint64_t seed);

/// Fills every removed-edge count between consecutive checkpoints i < j by
/// linear interpolation and divides by N. A trace that stops short of E is
/// closed with (E, 1): once every edge is gone only singletons remain.
/// Throws IntegrityError on an empty, unordered, increasing-size or
/// out-of-range trace.
PerformanceCurve interpolate_trace(const RemovalTrace& trace, std::size_t nodes, std::size_t edges);

}  // namespace netvuln
