#include "netvuln/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netvuln/errors.hpp"

namespace netvuln {

void validate(const PerformanceCurve& curve) {
  if (curve.edges == 0) throw IntegrityError("performance curve needs at least one edge");
  if (curve.s.size() != curve.edges + 1)
    throw IntegrityError("performance curve must have E + 1 samples");
  for (std::size_t i = 0; i < curve.s.size(); ++i) {
    if (!(curve.s[i] >= 0.0 && curve.s[i] <= 1.0))
      throw IntegrityError("performance sample outside [0, 1]");
    if (i > 0 && curve.s[i] > curve.s[i - 1])
      throw IntegrityError("performance curve must be non-increasing");
  }
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
}

// alpha * E with products that land within rounding of an integer snapped
// onto it, so 0.2 * 15 counts as 3 edges and not 3.0000000000000004.
double scaled_alpha(double alpha, std::size_t edges) {
  const double x = alpha * static_cast<double>(edges);
  const double nearest = std::round(x);
  return std::abs(x - nearest) < 1e-9 ? nearest : x;
}

double sample(const PerformanceCurve& curve, std::size_t i, const IndexOptions& opts) {
  if (opts.paper_compat && i == curve.edges) return 0.0;
  return curve.s[i];
}

double trapezoids(const PerformanceCurve& curve, std::size_t upto, const IndexOptions& opts) {
  double sum = 0.0;
  for (std::size_t i = 1; i <= upto; ++i) sum += (sample(curve, i - 1, opts) + sample(curve, i, opts)) / 2.0;
  return sum;
}

void check_range(double index, double alpha) {
  if (index < -0.5 || index > 0.5) {
    std::ostringstream msg;
    msg << "invulnerability index " << index << " at alpha " << alpha
        << " outside [-0.5, 0.5]; the graph is too small for ceil(alpha*E) sampling, use exact mode";
    throw IntegrityError(msg.str());
  }
}

}  // namespace

double curve_area(const PerformanceCurve& curve, double alpha, const IndexOptions& opts) {
  check_alpha(alpha);
  validate(curve);
  const double x = scaled_alpha(alpha, curve.edges);
  const double e = static_cast<double>(curve.edges);
  if (!opts.exact) return trapezoids(curve, static_cast<std::size_t>(std::ceil(x)), opts) / e;

  const auto whole = static_cast<std::size_t>(std::floor(x));
  double sum = trapezoids(curve, whole, opts);
  const double frac = x - static_cast<double>(whole);
  if (frac > 0.0) {
    const double left = sample(curve, whole, opts);
    const double at_alpha = left + frac * (sample(curve, whole + 1, opts) - left);
    sum += frac * (left + at_alpha) / 2.0;
  }
  return sum / e;
}

double invulnerability_index(const PerformanceCurve& curve, double alpha, const IndexOptions& opts) {
  const double index = curve_area(curve, alpha, opts) + (alpha * alpha / 2.0 - alpha);
  check_range(index, alpha);
  return index;
}

double index_I1_fast(const PerformanceCurve& curve, const IndexOptions& opts) {
  validate(curve);
  double sum = 0.0;
  for (std::size_t i = 0; i <= curve.edges; ++i) sum += sample(curve, i, opts);
  const double index = (sum - 0.5) / static_cast<double>(curve.edges) - 0.5;
  check_range(index, 1.0);
  return index;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::robust: return "robust";
    case Verdict::fragile: return "fragile";
    case Verdict::neutral: return "neutral";
  }
  return "unknown";
}

Verdict classify(double index) {
  if (index > 0.0) return Verdict::robust;
  if (index < 0.0) return Verdict::fragile;
  return Verdict::neutral;
}

void validate_alphas(const std::vector<double>& alphas) {
  if (alphas.empty()) throw ParameterError("at least one alpha is required");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    check_alpha(alphas[i]);
    if (i > 0 && alphas[i] <= alphas[i - 1])
      throw ParameterError("alpha values must be strictly increasing");
  }
}

RobustnessReport make_report(const PerformanceCurve& curve, Strategy strategy, std::size_t trial,
                             std::uint64_t seed, const GraphFingerprint& graph,
                             const std::vector<double>& alphas, const IndexOptions& opts) {
  validate_alphas(alphas);
  RobustnessReport report{strategy, trial, seed, graph, {}};
  report.subindexes.reserve(alphas.size());
  for (double alpha : alphas) {
    const double area = curve_area(curve, alpha, opts);
    const double index = area + (alpha * alpha / 2.0 - alpha);
    check_range(index, alpha);
    report.subindexes.push_back({alpha, area, index, classify(index)});
  }
  return report;
}

TrialSummary aggregate_trials(const std::vector<RobustnessReport>& reports) {
  if (reports.empty()) throw ParameterError("no reports to aggregate");
  const auto& first = reports.front();
  for (const auto& r : reports) {
    if (!(r.strategy == first.strategy)) throw ParameterError("cannot aggregate mixed strategies");
    if (r.graph != first.graph) throw ParameterError("cannot aggregate reports from different graphs");
    if (r.subindexes.size() != first.subindexes.size())
      throw ParameterError("reports use different alpha sets");
    for (std::size_t a = 0; a < r.subindexes.size(); ++a)
      if (r.subindexes[a].alpha != first.subindexes[a].alpha)
        throw ParameterError("reports use different alpha sets");
  }

  TrialSummary summary{first.strategy, reports.size(), {}};
  const double n = static_cast<double>(reports.size());
  for (std::size_t a = 0; a < first.subindexes.size(); ++a) {
    IndexStats stats{first.subindexes[a].alpha, 0.0, 0.0, first.subindexes[a].index,
                     first.subindexes[a].index};
    for (const auto& r : reports) {
      const double v = r.subindexes[a].index;
      stats.mean += v;
      stats.min = std::min(stats.min, v);
      stats.max = std::max(stats.max, v);
    }
    stats.mean /= n;
    if (reports.size() > 1) {
      double ss = 0.0;
      for (const auto& r : reports) ss += (r.subindexes[a].index - stats.mean) * (r.subindexes[a].index - stats.mean);
      stats.stddev = std::sqrt(ss / (n - 1.0));
    }
    summary.per_alpha.push_back(stats);
  }
  return summary;
}

double TransferComparison::max_abs_error() const {
  double worst = 0.0;
  for (double e : error) worst = std::max(worst, std::abs(e));
  return worst;
}

TransferComparison compare_node_edge(const Graph& g, AttackRule rule, const TransferSeeds& seeds,
                                     const std::vector<double>& alphas, const IndexOptions& opts) {
  validate_alphas(alphas);
  const auto node_plan = plan_attack(g, {AttackTarget::node, rule}, seeds.plan);
  const auto node_curve = interpolate_trace(execute_node_attack(g, node_plan, seeds.node_bundles),
                                            g.node_count(), g.edge_count());
  const auto edge_plan = node_edge_transfer(g, node_plan, seeds.edge_transfer);
  const auto edge_curve =
      interpolate_trace(execute_edge_attack(g, edge_plan), g.node_count(), g.edge_count());

  TransferComparison out;
  out.rule = rule;
  out.alphas = alphas;
  for (double alpha : alphas) {
    const double node = invulnerability_index(node_curve, alpha, opts);
    const double edge = invulnerability_index(edge_curve, alpha, opts);
    out.node_index.push_back(node);
    out.edge_index.push_back(edge);
    out.error.push_back(edge - node);
  }
  return out;
}

}  // namespace netvuln
