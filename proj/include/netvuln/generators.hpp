#pragma once

#include <cstddef>
#include <cstdint>

#include "netvuln/graph.hpp"

namespace netvuln {

/// Watts-Strogatz small-world parameters. Node i starts linked to its
/// k right neighbours i+1..i+k (mod n), so the lattice degree is 2k.
struct WsParams {
  std::size_t n = 1000;
  std::size_t k = 10;
  double p = 0.02;
  std::uint64_t seed = 0;
};

/// Throws ParameterError unless n >= 3, 1 <= k < n/2 and 0 <= p <= 1.
void validate(const WsParams& params);

/// Ring lattice plus rewiring. Each lattice edge (i, i+j) is visited once,
/// j-major then i; with probability p its far endpoint is moved to a
/// uniformly drawn node, redrawing on self-loops and existing edges. After
/// 100 rejected draws the edge is left in place. The result always has
/// exactly n*k edges.
Graph generate_ws(const WsParams& params);

/// The p = 0 lattice, without touching any RNG.
Graph ring_lattice(std::size_t n, std::size_t k);

}  // namespace netvuln
