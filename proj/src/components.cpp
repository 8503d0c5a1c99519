#include "netvuln/components.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "netvuln/errors.hpp"

namespace netvuln {

std::size_t giant_component_size(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  std::vector<NodeId> queue;
  queue.reserve(n);
  std::size_t best = 0;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    queue.clear();
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    best = std::max(best, queue.size());
  }
  return best;
}

std::size_t giant_component_size_union_find(const Graph& g) {
  DisjointSets sets(g.node_count());
  for (const auto& e : g.edges()) sets.unite(e.u, e.v);
  return sets.largest();
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), largest_(n > 0 ? 1 : 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  largest_ = std::max(largest_, size_[a]);
  return true;
}

namespace {

void check_removal_order(const Graph& g, std::span<const EdgeId> order) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(order.size());
  for (const auto& e : order) {
    if (!g.has_edge(e)) throw IntegrityError("removal order names an edge not in the graph");
    if (!seen.insert(e.key()).second) throw IntegrityError("removal order repeats an edge");
  }
}

}  // namespace

std::vector<std::size_t> giant_component_profile(const Graph& g, std::span<const EdgeId> order) {
  check_removal_order(g, order);

  DisjointSets sets(g.node_count());
  if (order.size() != g.edge_count()) {
    std::unordered_set<std::uint64_t> removed;
    removed.reserve(order.size());
    for (const auto& e : order) removed.insert(e.key());
    for (const auto& e : g.edges())
      if (!removed.contains(e.key())) sets.unite(e.u, e.v);
  }

  std::vector<std::size_t> profile(order.size() + 1);
  profile[order.size()] = sets.largest();
  for (std::size_t i = order.size(); i-- > 0;) {
    sets.unite(order[i].u, order[i].v);
    profile[i] = sets.largest();
  }
  return profile;
}

std::vector<std::size_t> giant_component_profile_bfs(const Graph& g,
                                                     std::span<const EdgeId> order) {
  check_removal_order(g, order);
  Graph work = g;
  std::vector<std::size_t> profile;
  profile.reserve(order.size() + 1);
  profile.push_back(giant_component_size(work));
  for (const auto& e : order) {
    work.remove_edge(e);
    profile.push_back(giant_component_size(work));
  }
  return profile;
}

}  // namespace netvuln
