#pragma once

#include <cstddef>
#include <vector>

namespace netvuln {

/// Normalized giant-component size s_i after i removed edges, i = 0..E.
/// Between samples the curve is the straight line joining them.
struct PerformanceCurve {
  std::vector<double> s;
  std::size_t edges = 0;
  std::size_t nodes = 0;

  /// Removed-edge fraction of sample i.
  double r(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(edges); }
};

/// Throws IntegrityError unless s has E+1 entries in [0, 1], is
/// non-increasing and E >= 1.
void validate(const PerformanceCurve& curve);

}  // namespace netvuln
