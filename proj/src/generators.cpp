#include "netvuln/generators.hpp"

#include <cmath>
#include <string>

#include "netvuln/errors.hpp"
#include "netvuln/rng.hpp"

namespace netvuln {

namespace {
constexpr int kMaxRewireDraws = 100;
}

void validate(const WsParams& params) {
  if (params.n < 3) throw ParameterError("ws: n must be at least 3");
  if (params.k < 1 || 2 * params.k >= params.n)
    throw ParameterError("ws: k must satisfy 1 <= k < n/2 (got k=" + std::to_string(params.k) +
                         ", n=" + std::to_string(params.n) + ")");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw ParameterError("ws: p must lie in [0, 1]");
}

Graph ring_lattice(std::size_t n, std::size_t k) {
  validate(WsParams{n, k, 0.0, 0});
  Graph g(n);
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t i = 0; i < n; ++i)
      g.add_edge(static_cast<NodeId>(i), static_cast<NodeId>((i + j) % n));
  return g;
}

Graph generate_ws(const WsParams& params) {
  validate(params);
  Graph g = ring_lattice(params.n, params.k);
  if (params.p == 0.0) return g;

  Rng rng(derive_seed(params.seed, StreamPurpose::generation));
  for (std::size_t j = 1; j <= params.k; ++j) {
    for (std::size_t i = 0; i < params.n; ++i) {
      if (!rng.bernoulli(params.p)) continue;
      const auto source = static_cast<NodeId>(i);
      const auto old_target = static_cast<NodeId>((i + j) % params.n);
      for (int attempt = 0; attempt < kMaxRewireDraws; ++attempt) {
        const auto target = static_cast<NodeId>(rng.uniform_index(params.n));
        if (target == source || g.has_edge(EdgeId::of(source, target))) continue;
        g.remove_edge(EdgeId::of(source, old_target));
        g.add_edge(source, target);
        break;
      }
    }
  }
  return g;
}

}  // namespace netvuln
