#include <doctest.h>

#include <random>

#include "netvuln/centrality.hpp"
#include "netvuln/components.hpp"
#include "netvuln/errors.hpp"
#include "netvuln/graph.hpp"
#include "oracles.hpp"

using namespace netvuln;

namespace {

Graph path(std::size_t n) {
  Graph g(n);
  for (NodeId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("graph rejects structural violations") {
  CHECK_THROWS_AS(Graph(0), ValidationError);
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), ValidationError);
  CHECK_THROWS_AS(g.add_edge(1, 0), ValidationError);
  CHECK_THROWS_AS(g.add_edge(0, 3), ValidationError);
  CHECK(g.edge_count() == 1);

  const std::vector<EdgeId> dup{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(Graph::from_edges(2, dup), ValidationError);
}

TEST_CASE("edge ids normalize endpoint order") {
  CHECK(EdgeId::of(5, 2) == EdgeId{2, 5});
  CHECK(EdgeId::of(2, 5) == EdgeId::of(5, 2));
}

TEST_CASE("adjacency stays symmetric under removal") {
  Graph g = path(4);
  CHECK(g.remove_edge({1, 2}));
  CHECK_FALSE(g.remove_edge({1, 2}));
  CHECK(g.edge_count() == 2);
  CHECK(g.node_count() == 4);
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v : g.neighbors(u)) {
      const auto back = g.neighbors(v);
      CHECK(std::find(back.begin(), back.end(), u) != back.end());
    }
  CHECK(g.edges() == std::vector<EdgeId>{{0, 1}, {2, 3}});
}

TEST_CASE("fingerprint tracks the edge set") {
  Graph a = path(4);
  Graph b = path(4);
  CHECK(a.fingerprint() == b.fingerprint());
  b.remove_edge({0, 1});
  b.add_edge(0, 1);
  CHECK(a.fingerprint() == b.fingerprint());
  b.remove_edge({2, 3});
  b.add_edge(0, 3);
  CHECK_FALSE(a.fingerprint() == b.fingerprint());
}

TEST_CASE("giant component examples") {
  CHECK(giant_component_size(path(3)) == 3);
  CHECK(giant_component_size(Graph(5)) == 1);

  Graph g(7);  // two triangles and an isolated node
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}) g.add_edge(a, b);
  CHECK(oracle::component_sizes(g).front() == 3);
  CHECK(giant_component_size(g) == 3);
  CHECK(giant_component_size_union_find(g) == 3);
}

TEST_CASE("giant component: BFS and union-find agree on random graphs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  std::uniform_real_distribution<double> density(0.0, 0.2);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(size(rng), density(rng), rng);
    const auto bfs = giant_component_size(g);
    CHECK(bfs == giant_component_size_union_find(g));
    CHECK(bfs == oracle::component_sizes(g).front());
  }
}

TEST_CASE("giant component never grows under edge removal") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(25, 0.15, rng);
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    std::size_t last = giant_component_size(g);
    for (const auto& e : edges) {
      g.remove_edge(e);
      const auto now = giant_component_size(g);
      CHECK(now <= last);
      last = now;
    }
    CHECK(last == 1);
  }
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(30, 0.2, rng);
    const auto deg = node_degree(g);
    double sum = 0;
    for (double d : deg.values) sum += d;
    CHECK(sum == 2.0 * static_cast<double>(g.edge_count()));
  }
}
