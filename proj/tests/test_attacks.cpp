#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "netvuln/attacks.hpp"
#include "netvuln/components.hpp"
#include "netvuln/errors.hpp"
#include "netvuln/generators.hpp"
#include "oracles.hpp"

using namespace netvuln;

namespace {

Graph make(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (NodeId i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph triangle() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }

std::vector<std::size_t> giants(const RemovalTrace& t) {
  std::vector<std::size_t> out;
  for (const auto& p : t.points) out.push_back(p.giant);
  return out;
}

AttackPlan node_plan_in_order(const Graph& g, std::vector<NodeId> order) {
  AttackPlan plan;
  plan.strategy = {AttackTarget::node, AttackRule::random};
  plan.nodes = std::move(order);
  plan.source = g.fingerprint();
  return plan;
}

AttackPlan edge_plan_in_order(const Graph& g, std::vector<EdgeId> order) {
  AttackPlan plan;
  plan.strategy = {AttackTarget::edge, AttackRule::random};
  plan.edges = std::move(order);
  plan.source = g.fingerprint();
  return plan;
}

}  // namespace

TEST_CASE("strategy names round-trip") {
  for (const auto& s : kAllStrategies) CHECK(parse_strategy(to_string(s)) == s);
  CHECK(to_string(kAllStrategies[0]) == "rn-edge");
  CHECK(to_string(kAllStrategies[5]) == "ib-node");
  CHECK(strategy_index(parse_strategy("id-node")) == 4);
  CHECK_THROWS_AS(parse_strategy("rd-edge"), ParameterError);
  CHECK_THROWS_AS(parse_strategy(""), ParameterError);
}

TEST_CASE("plan: star under node ID removes the center first") {
  const Graph g = star(4);
  const auto plan = plan_attack(g, parse_strategy("id-node"), 5);
  REQUIRE(plan.nodes.size() == 5);
  CHECK(plan.nodes.front() == 0);
  CHECK(plan.scores.front() == 4);
  std::set<NodeId> leaves(plan.nodes.begin() + 1, plan.nodes.end());
  CHECK(leaves == std::set<NodeId>{1, 2, 3, 4});
}

TEST_CASE("plan: path 0-1-2-3 under edge IB removes the middle edge first") {
  const Graph g = make(4, {{0, 1}, {1, 2}, {2, 3}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto plan = plan_attack(g, parse_strategy("ib-edge"), seed);
    CHECK(plan.edges.front() == EdgeId{1, 2});
    CHECK(plan.scores.front() == doctest::Approx(8.0));
  }
}

TEST_CASE("plan: same seed gives the same permutation") {
  const Graph g = generate_ws({60, 3, 0.2, 1});
  for (const auto& s : kAllStrategies) {
    const auto a = plan_attack(g, s, 42);
    const auto b = plan_attack(g, s, 42);
    CHECK(a.edges == b.edges);
    CHECK(a.nodes == b.nodes);
  }
  CHECK(plan_attack(g, parse_strategy("rn-edge"), 1).edges !=
        plan_attack(g, parse_strategy("rn-edge"), 2).edges);
}

TEST_CASE("plan: ties are broken at random") {
  // Every leaf edge of a star has the same edge degree.
  const Graph g = star(6);
  std::set<std::vector<EdgeId>> seen;
  for (std::uint64_t seed = 0; seed < 40; ++seed)
    seen.insert(plan_attack(g, parse_strategy("id-edge"), seed).edges);
  CHECK(seen.size() > 20);
}

TEST_CASE("plan: every plan is a permutation with non-increasing scores") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(20, 0.2, rng);
    if (g.edge_count() == 0) continue;
    for (const auto& s : kAllStrategies) {
      const auto plan = plan_attack(g, s, static_cast<std::uint64_t>(trial));
      CHECK(plan.source == g.fingerprint());
      if (s.target == AttackTarget::edge) {
        auto sorted = plan.edges;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == g.edges());
      } else {
        auto sorted = plan.nodes;
        std::sort(sorted.begin(), sorted.end());
        std::vector<NodeId> all(g.node_count());
        for (NodeId n = 0; n < all.size(); ++n) all[n] = n;
        CHECK(sorted == all);
      }
      if (auto kind = ranking_centrality(s)) {
        const auto ranking = compute_centrality(g, *kind);
        REQUIRE(plan.scores.size() == plan.size());
        for (std::size_t i = 0; i < plan.scores.size(); ++i) {
          if (i > 0) CHECK(plan.scores[i] <= plan.scores[i - 1]);
          const double raw = s.target == AttackTarget::edge ? ranking.of(plan.edges[i])
                                                            : ranking.of(plan.nodes[i]);
          CHECK(plan.scores[i] == doctest::Approx(raw).epsilon(1e-9));
        }
      } else {
        CHECK(plan.scores.empty());
      }
    }
  }
}

TEST_CASE("plan: edgeless graph is rejected") {
  CHECK_THROWS_AS(plan_attack(Graph(3), parse_strategy("rn-edge"), 0), ParameterError);
}

TEST_CASE("plan: mismatched ranking is rejected") {
  const Graph g = star(3);
  CHECK_THROWS_AS(plan_attack(g, parse_strategy("ib-edge"), 0, node_degree(g)), ParameterError);
}

TEST_CASE("edge attack traces") {
  const Graph t = triangle();
  auto order = t.edges();
  do {
    const auto trace = execute_edge_attack(t, edge_plan_in_order(t, order));
    CHECK(giants(trace) == std::vector<std::size_t>{3, 3, 2, 1});
    for (std::size_t i = 0; i < trace.points.size(); ++i) CHECK(trace.points[i].removed_edges == i);
  } while (std::next_permutation(order.begin(), order.end()));

  const Graph single = make(2, {{0, 1}});
  CHECK(giants(execute_edge_attack(single, plan_attack(single, parse_strategy("rn-edge"), 0))) ==
        std::vector<std::size_t>{2, 1});

  const Graph pair = make(4, {{0, 1}, {2, 3}});
  CHECK(giants(execute_edge_attack(pair, edge_plan_in_order(pair, {{0, 1}, {2, 3}}))) ==
        std::vector<std::size_t>{2, 2, 1});
  CHECK(giants(execute_edge_attack(pair, edge_plan_in_order(pair, {{2, 3}, {0, 1}}))) ==
        std::vector<std::size_t>{2, 2, 1});
}

TEST_CASE("edge attack rejects a plan for another graph") {
  const Graph a = triangle();
  const Graph b = make(3, {{0, 1}, {1, 2}});
  const auto plan = plan_attack(a, parse_strategy("rn-edge"), 0);
  CHECK_THROWS_AS(execute_edge_attack(b, plan), IntegrityError);
  CHECK_THROWS_AS(execute_edge_attack(a, plan_attack(a, parse_strategy("rn-node"), 0)), IntegrityError);
}

TEST_CASE("node attack traces") {
  const Graph s = star(4);
  const auto center_first = node_plan_in_order(s, {0, 1, 2, 3, 4});
  const auto trace = execute_node_attack(s, center_first, 0);
  CHECK(trace.points == std::vector<Checkpoint>{{0, 5}, {4, 1}});

  const Graph t = triangle();
  const auto abc = execute_node_attack(t, node_plan_in_order(t, {0, 1, 2}), 3);
  CHECK(abc.points == std::vector<Checkpoint>{{0, 3}, {2, 2}, {3, 1}});

  const Graph g = generate_ws({40, 3, 0.1, 2});
  const auto plan = plan_attack(g, parse_strategy("ib-node"), 9);
  CHECK(execute_node_attack(g, plan, 4).points == execute_node_attack(g, plan, 4).points);
  CHECK(execute_node_attack(g, plan, 4).points.back() == Checkpoint{g.edge_count(), 1});
}

TEST_CASE("node attack rejects incomplete plans") {
  const Graph t = triangle();
  CHECK_THROWS_AS(execute_node_attack(t, node_plan_in_order(t, {0, 1}), 0), IntegrityError);
  CHECK_THROWS_AS(execute_node_attack(t, node_plan_in_order(t, {0, 1, 1}), 0), IntegrityError);
}

TEST_CASE("node to edge transfer") {
  const Graph t = triangle();
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto plan = node_edge_transfer(t, node_plan_in_order(t, {0, 1, 2}), seed);
    REQUIRE(plan.edges.size() == 3);
    CHECK(plan.strategy.target == AttackTarget::edge);
    CHECK(std::set<EdgeId>(plan.edges.begin(), plan.edges.begin() + 2) ==
          std::set<EdgeId>{{0, 1}, {0, 2}});
    CHECK(plan.edges[2] == EdgeId{1, 2});
  }

  const Graph p = make(3, {{0, 1}, {1, 2}});
  const auto plan = node_edge_transfer(p, node_plan_in_order(p, {1, 0, 2}), 1);
  CHECK(std::set<EdgeId>(plan.edges.begin(), plan.edges.end()) == std::set<EdgeId>{{0, 1}, {1, 2}});
  CHECK(plan.edges.size() == 2);

  const Graph s = star(4);
  const auto sp = node_edge_transfer(s, node_plan_in_order(s, {0, 1, 2, 3, 4}), 2);
  auto sorted = sp.edges;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == s.edges());
}

TEST_CASE("transferred edge attack meets the node attack at bundle boundaries") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(25, 0.2, rng);
    if (g.edge_count() == 0) continue;
    const auto plan = plan_attack(g, kAllStrategies[3 + trial % 3], static_cast<std::uint64_t>(trial));
    const auto node_trace = execute_node_attack(g, plan, 100 + trial);
    for (std::uint64_t transfer_seed : {std::uint64_t(100 + trial), std::uint64_t(7)}) {
      const auto edge_trace = execute_edge_attack(g, node_edge_transfer(g, plan, transfer_seed));
      for (const auto& cp : node_trace.points)
        CHECK(edge_trace.points.at(cp.removed_edges) == cp);
    }
    CHECK(node_trace.points.back().giant == 1);
  }
}

TEST_CASE("interpolation fills bundles linearly") {
  const auto a = interpolate_trace({{{0, 5}, {4, 1}}}, 5, 4);
  CHECK(a.s == std::vector<double>{1.0, 0.8, 0.6, 0.4, 0.2});

  const auto b = interpolate_trace({{{0, 4}, {2, 4}, {4, 2}}}, 4, 4);
  CHECK(b.s == std::vector<double>{1.0, 1.0, 1.0, 0.75, 0.5});

  // A trace that stops early is closed with a singleton checkpoint at E.
  const auto c = interpolate_trace({{{0, 4}, {2, 3}}}, 4, 4);
  CHECK(c.s == std::vector<double>{1.0, 0.875, 0.75, 0.5, 0.25});
}

TEST_CASE("interpolation is the identity on edge-attack traces") {
  const Graph g = generate_ws({30, 2, 0.2, 3});
  const auto trace = execute_edge_attack(g, plan_attack(g, parse_strategy("rn-edge"), 1));
  const auto curve = interpolate_trace(trace, g.node_count(), g.edge_count());
  REQUIRE(curve.s.size() == trace.points.size());
  for (std::size_t i = 0; i < curve.s.size(); ++i)
    CHECK(curve.s[i] == static_cast<double>(trace.points[i].giant) / 30.0);
}

TEST_CASE("interpolated curves stay monotone and inside the checkpoint hull") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(30, 0.15, rng);
    if (g.edge_count() == 0) continue;
    const auto plan = plan_attack(g, kAllStrategies[3 + trial % 3], static_cast<std::uint64_t>(trial));
    const auto trace = execute_node_attack(g, plan, 5);
    const auto curve = interpolate_trace(trace, g.node_count(), g.edge_count());
    const double n = static_cast<double>(g.node_count());
    for (std::size_t i = 0; i < curve.s.size(); ++i) {
      if (i > 0) CHECK(curve.s[i] <= curve.s[i - 1]);
      CHECK(curve.s[i] >= 1.0 / n - 1e-15);
      CHECK(curve.s[i] <= 1.0);
    }
    for (std::size_t k = 1; k < trace.points.size(); ++k) {
      const auto& lo = trace.points[k - 1];
      const auto& hi = trace.points[k];
      for (std::size_t m = lo.removed_edges; m <= hi.removed_edges; ++m) {
        CHECK(curve.s[m] <= lo.giant / n + 1e-15);
        CHECK(curve.s[m] >= hi.giant / n - 1e-15);
      }
    }
  }
}

TEST_CASE("interpolation rejects malformed traces") {
  CHECK_THROWS_AS(interpolate_trace({}, 3, 3), IntegrityError);
  CHECK_THROWS_AS(interpolate_trace({{{1, 3}}}, 3, 3), IntegrityError);
  CHECK_THROWS_AS(interpolate_trace({{{0, 2}, {1, 3}}}, 3, 3), IntegrityError);
  CHECK_THROWS_AS(interpolate_trace({{{0, 3}, {2, 2}, {2, 1}}}, 3, 3), IntegrityError);
  CHECK_THROWS_AS(interpolate_trace({{{0, 3}, {4, 1}}}, 3, 3), IntegrityError);
  CHECK_THROWS_AS(interpolate_trace({{{0, 4}}}, 3, 3), IntegrityError);
  CHECK_THROWS_AS(interpolate_trace({{{0, 0}}}, 3, 3), IntegrityError);
}
