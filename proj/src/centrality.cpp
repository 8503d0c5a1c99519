#include "netvuln/centrality.hpp"

#include <algorithm>
#include <stdexcept>

namespace netvuln {

std::string_view to_string(CentralityKind kind) {
  switch (kind) {
    case CentralityKind::node_degree: return "node-degree";
    case CentralityKind::node_betweenness: return "node-betweenness";
    case CentralityKind::edge_degree: return "edge-degree";
    case CentralityKind::edge_betweenness: return "edge-betweenness";
  }
  return "unknown";
}

double CentralityVector::of(NodeId n) const { return values.at(n); }

double CentralityVector::of(EdgeId e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) throw std::out_of_range("edge not in centrality vector");
  return values[static_cast<std::size_t>(it - edges.begin())];
}

CentralityVector node_degree(const Graph& g) {
  CentralityVector out{CentralityKind::node_degree, {}, std::vector<double>(g.node_count())};
  for (NodeId n = 0; n < g.node_count(); ++n) out.values[n] = static_cast<double>(g.degree(n));
  return out;
}

CentralityVector edge_degree(const Graph& g) {
  CentralityVector out{CentralityKind::edge_degree, g.edges(), {}};
  out.values.reserve(out.edges.size());
  for (const auto& e : out.edges)
    out.values.push_back(static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v)));
  return out;
}

namespace {

// Adjacency with the index (into the sorted edge list) of each incident edge.
struct IndexedAdjacency {
  std::vector<std::size_t> offset;
  std::vector<NodeId> target;
  std::vector<std::size_t> edge;

  IndexedAdjacency(const Graph& g, const std::vector<EdgeId>& edges)
      : offset(g.node_count() + 1, 0), target(2 * edges.size()), edge(2 * edges.size()) {
    for (const auto& e : edges) {
      ++offset[e.u + 1];
      ++offset[e.v + 1];
    }
    for (std::size_t i = 1; i < offset.size(); ++i) offset[i] += offset[i - 1];
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      target[fill[edges[i].u]] = edges[i].v;
      edge[fill[edges[i].u]++] = i;
      target[fill[edges[i].v]] = edges[i].u;
      edge[fill[edges[i].v]++] = i;
    }
  }
};

void brandes(const Graph& g, std::vector<double>* node_scores,
             const std::vector<EdgeId>& edges, std::vector<double>* edge_scores) {
  const std::size_t n = g.node_count();
  const IndexedAdjacency adj(g, edges);

  std::vector<long long> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (std::size_t k = adj.offset[v]; k < adj.offset[v + 1]; ++k) {
        const NodeId w = adj.target[k];
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }

    // Predecessors of w are the neighbours one level closer to s.
    for (std::size_t idx = order.size(); idx-- > 1;) {
      const NodeId w = order[idx];
      const double coeff = (1.0 + delta[w]) / sigma[w];
      for (std::size_t k = adj.offset[w]; k < adj.offset[w + 1]; ++k) {
        const NodeId v = adj.target[k];
        if (dist[v] != dist[w] - 1) continue;
        const double credit = sigma[v] * coeff;
        delta[v] += credit;
        if (edge_scores) (*edge_scores)[adj.edge[k]] += credit;
      }
      if (node_scores) (*node_scores)[w] += delta[w];
    }
  }
}

}  // namespace

CentralityVector node_betweenness(const Graph& g) {
  CentralityVector out{CentralityKind::node_betweenness, {}, std::vector<double>(g.node_count())};
  brandes(g, &out.values, g.edges(), nullptr);
  return out;
}

CentralityVector edge_betweenness(const Graph& g) {
  CentralityVector out{CentralityKind::edge_betweenness, g.edges(), {}};
  out.values.assign(out.edges.size(), 0.0);
  brandes(g, nullptr, out.edges, &out.values);
  return out;
}

CentralityVector compute_centrality(const Graph& g, CentralityKind kind) {
  switch (kind) {
    case CentralityKind::node_degree: return node_degree(g);
    case CentralityKind::node_betweenness: return node_betweenness(g);
    case CentralityKind::edge_degree: return edge_degree(g);
    case CentralityKind::edge_betweenness: return edge_betweenness(g);
  }
  throw std::invalid_argument("unknown centrality kind");
}

}  // namespace netvuln
