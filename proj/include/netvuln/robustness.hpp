#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "netvuln/attacks.hpp"
#include "netvuln/curve.hpp"
#include "netvuln/graph.hpp"

namespace netvuln {

/// Removed-edge fractions at which subindexes are reported by default.
inline const std::vector<double> kDefaultAlphas{0.2, 0.5, 0.7, 1.0};

struct IndexOptions {
  /// Evaluate with s_E = 0 instead of the true 1/N left by an edgeless graph.
  bool paper_compat = true;
  /// Integrate curve and baseline to exactly alpha (partial final
  /// trapezoid) instead of summing trapezoids up to ceil(alpha * E).
  bool exact = false;
};

/// The reference line f(r) = 1 - r: losing a fraction r of the edges costs
/// the same fraction of nodes.
constexpr double baseline(double r) noexcept { return 1.0 - r; }

/// Area under the performance curve from r = 0.
///
/// Default mode: (1/E) * sum_{i=1..e} (s_{i-1} + s_i) / 2 with
/// e = ceil(alpha * E). Exact mode stops at r = alpha. Throws ParameterError
/// unless 0 < alpha <= 1.
double curve_area(const PerformanceCurve& curve, double alpha, const IndexOptions& opts = {});

/// I_alpha = A_alpha + (alpha^2 / 2 - alpha): the integral of the curve
/// minus the baseline over [0, alpha]. Positive means the network lost
/// fewer nodes than edges on average.
///
/// The result must lie in [-0.5, 0.5]; IntegrityError otherwise. Default
/// mode can leave that range only on very small graphs, where ceil(alpha*E)/E
/// overshoots alpha by a large fraction; exact mode never does.
double invulnerability_index(const PerformanceCurve& curve, double alpha,
                             const IndexOptions& opts = {});

/// Closed form for alpha = 1: I_1 = (sum_i s_i - 1/2) / E - 1/2. Assumes
/// s_0 = 1 and s_E = 0 (the latter is what paper_compat enforces).
double index_I1_fast(const PerformanceCurve& curve, const IndexOptions& opts = {});

enum class Verdict { robust, fragile, neutral };

std::string_view to_string(Verdict v);

/// Sign of the index; exactly zero is neutral.
Verdict classify(double index);

/// Throws ParameterError unless the list is non-empty, strictly increasing
/// and inside (0, 1].
void validate_alphas(const std::vector<double>& alphas);

struct SubIndex {
  double alpha = 0;
  double area = 0;
  double index = 0;
  Verdict verdict = Verdict::neutral;
};

struct RobustnessReport {
  Strategy strategy;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  GraphFingerprint graph;
  std::vector<SubIndex> subindexes;
};

RobustnessReport make_report(const PerformanceCurve& curve, Strategy strategy, std::size_t trial,
                             std::uint64_t seed, const GraphFingerprint& graph,
                             const std::vector<double>& alphas, const IndexOptions& opts = {});

struct IndexStats {
  double alpha = 0;
  double mean = 0;
  double stddev = 0;  // sample standard deviation; 0 for a single trial
  double min = 0;
  double max = 0;
};

struct TrialSummary {
  Strategy strategy;
  std::size_t trials = 0;
  std::vector<IndexStats> per_alpha;
};

/// Per-alpha descriptive statistics. Throws ParameterError for an empty
/// list or reports that differ in strategy, graph or alpha set.
TrialSummary aggregate_trials(const std::vector<RobustnessReport>& reports);

/// Node attack against the edge attack obtained from it by expanding every
/// node into its edge bundle.
struct TransferComparison {
  AttackRule rule = AttackRule::initial_degree;
  std::vector<double> alphas;
  std::vector<double> node_index;
  std::vector<double> edge_index;
  /// edge - node, unclamped.
  std::vector<double> error;

  double max_abs_error() const;
};

/// Seeds for the three random choices in a comparison. When node_bundles
/// equals edge_transfer both attacks remove edges in the same order and the
/// only difference left is the interpolation inside each bundle.
struct TransferSeeds {
  std::uint64_t plan = 0;
  std::uint64_t node_bundles = 0;
  std::uint64_t edge_transfer = 0;
};

TransferComparison compare_node_edge(const Graph& g, AttackRule rule, const TransferSeeds& seeds,
                                     const std::vector<double>& alphas = kDefaultAlphas,
                                     const IndexOptions& opts = {});

}  // namespace netvuln
