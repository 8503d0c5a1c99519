#include "netvuln/attacks.hpp"

#include <algorithm>
#include <cmath>

#include "netvuln/components.hpp"
#include "netvuln/errors.hpp"
#include "netvuln/rng.hpp"

namespace netvuln {

namespace {

constexpr double kTieTolerance = 1e-9;

std::string_view rule_prefix(AttackRule rule) {
  switch (rule) {
    case AttackRule::random: return "rn";
    case AttackRule::initial_degree: return "id";
    case AttackRule::initial_betweenness: return "ib";
  }
  return "?";
}

// Replaces each score by the largest score of its tie group. Groups are
// anchored at their maximum so the grouping does not depend on input order.
std::vector<double> snap_ties(const std::vector<double>& scores) {
  std::vector<double> sorted = scores;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<double> anchors;
  for (double v : sorted)
    if (anchors.empty() || anchors.back() - v > kTieTolerance * std::max(1.0, anchors.back()))
      anchors.push_back(v);

  std::vector<double> snapped(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    // First anchor not greater than scores[i] + tolerance band; anchors are descending.
    auto it = std::partition_point(anchors.begin(), anchors.end(), [&](double a) {
      return a - scores[i] > kTieTolerance * std::max(1.0, a);
    });
    snapped[i] = *it;
  }
  return snapped;
}

template <class Unit>
void order_units(std::vector<Unit>& units, std::vector<double>& scores, Rng& rng,
                 const std::vector<double>* unit_scores) {
  if (!unit_scores) {
    rng.shuffle(std::span<Unit>(units));
    return;
  }
  std::vector<std::size_t> idx(units.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  rng.shuffle(std::span<std::size_t>(idx));
  const auto snapped = snap_ties(*unit_scores);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return snapped[a] > snapped[b]; });
  std::vector<Unit> ordered;
  ordered.reserve(units.size());
  scores.clear();
  scores.reserve(units.size());
  for (std::size_t i : idx) {
    ordered.push_back(units[i]);
    scores.push_back(snapped[i]);
  }
  units = std::move(ordered);
}

void check_plan_source(const Graph& g, const AttackPlan& plan, AttackTarget expected) {
  if (plan.strategy.target != expected)
    throw IntegrityError(expected == AttackTarget::edge ? "expected an edge plan"
                                                        : "expected a node plan");
  if (plan.source != g.fingerprint())
    throw IntegrityError("attack plan was built for a different graph");
}

}  // namespace

std::size_t strategy_index(Strategy s) {
  for (std::size_t i = 0; i < kAllStrategies.size(); ++i)
    if (kAllStrategies[i] == s) return i;
  throw ParameterError("unknown strategy");
}

std::string to_string(Strategy s) {
  std::string out(rule_prefix(s.rule));
  out += s.target == AttackTarget::edge ? "-edge" : "-node";
  return out;
}

Strategy parse_strategy(std::string_view name) {
  for (const auto& s : kAllStrategies)
    if (to_string(s) == name) return s;
  throw ParameterError("unknown attack strategy '" + std::string(name) +
                       "' (expected rn-edge, id-edge, ib-edge, rn-node, id-node or ib-node)");
}

std::optional<CentralityKind> ranking_centrality(Strategy s) {
  const bool edge = s.target == AttackTarget::edge;
  switch (s.rule) {
    case AttackRule::random: return std::nullopt;
    case AttackRule::initial_degree:
      return edge ? CentralityKind::edge_degree : CentralityKind::node_degree;
    case AttackRule::initial_betweenness:
      return edge ? CentralityKind::edge_betweenness : CentralityKind::node_betweenness;
  }
  return std::nullopt;
}

AttackPlan plan_attack(const Graph& g, Strategy strategy, std::uint64_t seed) {
  if (g.edge_count() == 0) throw ParameterError("cannot attack a graph without edges");
  if (auto kind = ranking_centrality(strategy))
    return plan_attack(g, strategy, seed, compute_centrality(g, *kind));
  return plan_attack(g, strategy, seed, CentralityVector{});
}

AttackPlan plan_attack(const Graph& g, Strategy strategy, std::uint64_t seed,
                       const CentralityVector& ranking) {
  if (g.edge_count() == 0) throw ParameterError("cannot attack a graph without edges");
  const auto kind = ranking_centrality(strategy);
  const std::vector<double>* scores = nullptr;
  if (kind) {
    if (ranking.kind != *kind)
      throw ParameterError("ranking centrality " + std::string(to_string(ranking.kind)) +
                           " does not match strategy " + to_string(strategy));
    scores = &ranking.values;
  }

  AttackPlan plan;
  plan.strategy = strategy;
  plan.source = g.fingerprint();
  Rng rng(derive_seed(seed, StreamPurpose::plan));

  if (strategy.target == AttackTarget::edge) {
    plan.edges = g.edges();
    if (scores && (ranking.edges != plan.edges))
      throw ParameterError("ranking centrality was computed on a different edge set");
    order_units(plan.edges, plan.scores, rng, scores);
  } else {
    plan.nodes.resize(g.node_count());
    for (NodeId n = 0; n < g.node_count(); ++n) plan.nodes[n] = n;
    if (scores && scores->size() != g.node_count())
      throw ParameterError("ranking centrality was computed on a different node set");
    order_units(plan.nodes, plan.scores, rng, scores);
  }
  return plan;
}

RemovalTrace execute_edge_attack(const Graph& g, const AttackPlan& plan) {
  check_plan_source(g, plan, AttackTarget::edge);
  if (plan.edges.size() != g.edge_count())
    throw IntegrityError("edge plan does not cover every edge");
  const auto profile = giant_component_profile(g, plan.edges);
  RemovalTrace trace;
  trace.points.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) trace.points.push_back({i, profile[i]});
  return trace;
}

BundleExpansion expand_node_plan(const Graph& g, const AttackPlan& plan, std::uint64_t seed) {
  check_plan_source(g, plan, AttackTarget::node);
  if (plan.nodes.size() != g.node_count())
    throw IntegrityError("node plan does not cover every node");
  std::vector<char> seen(g.node_count(), 0);
  for (NodeId n : plan.nodes) {
    if (!g.contains(n) || seen[n]) throw IntegrityError("node plan is not a permutation");
    seen[n] = 1;
  }

  Rng rng(derive_seed(seed, StreamPurpose::node_bundles));
  Graph work = g;
  BundleExpansion out;
  out.order.reserve(g.edge_count());
  for (NodeId n : plan.nodes) {
    auto bundle = work.incident_edges(n);
    if (bundle.empty()) continue;
    rng.shuffle(std::span<EdgeId>(bundle));
    for (const auto& e : bundle) {
      work.remove_edge(e);
      out.order.push_back(e);
    }
    out.boundaries.push_back(out.order.size());
  }
  return out;
}

RemovalTrace execute_node_attack(const Graph& g, const AttackPlan& plan, std::uint64_t seed) {
  const auto expansion = expand_node_plan(g, plan, seed);
  // Sizes at bundle boundaries do not depend on the order inside a bundle.
  const auto profile = giant_component_profile(g, expansion.order);
  RemovalTrace trace;
  trace.points.reserve(expansion.boundaries.size() + 1);
  trace.points.push_back({0, profile[0]});
  for (std::size_t b : expansion.boundaries) trace.points.push_back({b, profile[b]});
  return trace;
}

AttackPlan node_edge_transfer(const Graph& g, const AttackPlan& node_plan, std::uint64_t seed) {
  auto expansion = expand_node_plan(g, node_plan, seed);
  AttackPlan plan;
  plan.strategy = {AttackTarget::edge, node_plan.strategy.rule};
  plan.edges = std::move(expansion.order);
  plan.source = node_plan.source;
  return plan;
}

PerformanceCurve interpolate_trace(const RemovalTrace& trace, std::size_t nodes,
                                   std::size_t edges) {
  if (nodes == 0 || edges == 0) throw IntegrityError("trace needs N >= 1 and E >= 1");
  const auto& pts = trace.points;
  if (pts.empty() || pts.front().removed_edges != 0)
    throw IntegrityError("trace must start at zero removed edges");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].removed_edges > edges) throw IntegrityError("trace exceeds the edge count");
    if (pts[k].giant < 1 || pts[k].giant > nodes)
      throw IntegrityError("giant-component size outside [1, N]");
    if (k > 0 && pts[k].removed_edges <= pts[k - 1].removed_edges)
      throw IntegrityError("trace edge counts must strictly increase");
    if (k > 0 && pts[k].giant > pts[k - 1].giant)
      throw IntegrityError("giant-component size increased along the trace");
  }

  std::vector<Checkpoint> closed = pts;
  if (closed.back().removed_edges < edges) closed.push_back({edges, 1});

  PerformanceCurve curve;
  curve.nodes = nodes;
  curve.edges = edges;
  curve.s.resize(edges + 1);
  const double n = static_cast<double>(nodes);
  curve.s[0] = static_cast<double>(closed[0].giant) / n;
  for (std::size_t k = 1; k < closed.size(); ++k) {
    const auto [i, si] = closed[k - 1];
    const auto [j, sj] = closed[k];
    const double span = static_cast<double>(j - i);
    const double drop = static_cast<double>(sj) - static_cast<double>(si);
    for (std::size_t m = i + 1; m < j; ++m)
      curve.s[m] = (static_cast<double>(si) + static_cast<double>(m - i) / span * drop) / n;
    curve.s[j] = static_cast<double>(sj) / n;
  }
  return curve;
}

}  // namespace netvuln
