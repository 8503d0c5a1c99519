#include "netvuln/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <sstream>
#include <thread>

#include "netvuln/components.hpp"
#include "netvuln/errors.hpp"
#include "netvuln/results.hpp"
#include "netvuln/rng.hpp"

namespace netvuln {

namespace {

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParameterError("generator spec: bad value '" + std::string(text) + "' for " +
                         std::string(key));
  return value;
}

double parse_real(std::string_view key, std::string_view text) {
  // from_chars for double is missing from older libstdc++.
  std::string copy(text);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != copy.size() || copy.empty())
    throw ParameterError("generator spec: bad value '" + copy + "' for " + std::string(key));
  return value;
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  constexpr std::string_view prefix = "ws:";
  if (text.substr(0, prefix.size()) != prefix)
    throw ParameterError("unknown generator '" + std::string(text) + "' (only ws:... is supported)");
  GeneratorSpec spec;
  std::string_view rest = text.substr(prefix.size());
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParameterError("generator spec: expected key=value, got '" + std::string(item) + "'");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "n") {
      spec.params.n = parse_number<std::size_t>(key, value);
    } else if (key == "k") {
      spec.params.k = parse_number<std::size_t>(key, value);
    } else if (key == "p") {
      spec.params.p = parse_real(key, value);
    } else if (key == "seed") {
      spec.params.seed = parse_number<std::uint64_t>(key, value);
      spec.explicit_seed = true;
    } else {
      throw ParameterError("generator spec: unknown key '" + std::string(key) + "'");
    }
  }
  validate(spec.params);
  return spec;
}

std::string GeneratorSpec::to_string() const {
  std::ostringstream out;
  out << "ws:n=" << params.n << ",k=" << params.k << ",p=" << params.p;
  if (explicit_seed) out << ",seed=" << params.seed;
  return out.str();
}

void validate(const RunConfig& config) {
  if (config.input.has_value() == config.generate.has_value())
    throw ParameterError("exactly one of an input file or a generator spec is required");
  if (config.strategies.empty()) throw ParameterError("at least one attack strategy is required");
  for (std::size_t i = 0; i < config.strategies.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (config.strategies[i] == config.strategies[j])
        throw ParameterError("strategy " + to_string(config.strategies[i]) + " listed twice");
  if (config.trials == 0) throw ParameterError("trials must be at least 1");
  validate_alphas(config.alphas);
}

std::uint64_t trial_seed(std::uint64_t base, Strategy strategy, std::size_t trial) {
  return derive_seed(base, StreamPurpose::trial, {strategy_index(strategy), trial});
}

GraphInfo describe(const Graph& g, std::string name) {
  GraphInfo info;
  info.name = std::move(name);
  info.nodes = g.node_count();
  info.edges = g.edge_count();
  info.mean_degree = 2.0 * static_cast<double>(info.edges) / static_cast<double>(info.nodes);
  info.giant_component = giant_component_size(g);
  info.fingerprint = g.fingerprint();
  return info;
}

LabeledGraph load_network(const RunConfig& config) {
  if (config.input) return load_edge_list(*config.input);
  if (!config.generate) throw ParameterError("no input or generator given");
  WsParams params = config.generate->params;
  if (!config.generate->explicit_seed) params.seed = config.seed;
  return with_index_labels(generate_ws(params));
}

ResultRecord run_campaign(const RunConfig& config) {
  validate(config);
  std::string name = config.network_name;
  if (name.empty()) name = config.input ? config.input->stem().string() : std::string("ws");
  const auto network = load_network(config);
  return run_campaign(config, network.graph, std::move(name));
}

ResultRecord run_campaign(const RunConfig& config, const Graph& g, std::string network_name) {
  validate(config);
  if (g.edge_count() == 0) throw ValidationError("graph has no edges to attack");

  ResultRecord record;
  record.config = config;
  record.graph = describe(g, std::move(network_name));
  if (!record.graph.connected()) {
    std::ostringstream msg;
    msg << "graph is not connected (giant component " << record.graph.giant_component << " of "
        << record.graph.nodes << " nodes); curves start below 1";
    record.warnings.push_back(msg.str());
  }

  // Initial-graph centralities are shared by every trial of a strategy.
  std::map<CentralityKind, CentralityVector> rankings;
  for (const auto& s : config.strategies)
    if (auto kind = ranking_centrality(s); kind && !rankings.contains(*kind))
      rankings.emplace(*kind, compute_centrality(g, *kind));
  static const CentralityVector kNoRanking{};

  const std::size_t task_count = config.strategies.size() * config.trials;
  std::vector<TrialResult> results(task_count);
  std::vector<std::exception_ptr> failures(task_count);

  auto run_task = [&](std::size_t task) {
    const Strategy strategy = config.strategies[task / config.trials];
    const std::size_t trial = task % config.trials;
    const std::uint64_t seed = trial_seed(config.seed, strategy, trial);
    const auto kind = ranking_centrality(strategy);
    const auto& ranking = kind ? rankings.at(*kind) : kNoRanking;

    const auto plan = plan_attack(g, strategy, seed, ranking);
    const auto trace = strategy.target == AttackTarget::edge ? execute_edge_attack(g, plan)
                                                             : execute_node_attack(g, plan, seed);
    auto curve = interpolate_trace(trace, g.node_count(), g.edge_count());
    results[task].report = make_report(curve, strategy, trial, seed, record.graph.fingerprint,
                                       config.alphas, config.index);
    if (config.emit_curves) results[task].curve = std::move(curve);
  };

  std::size_t workers = config.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, task_count);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task; (task = next.fetch_add(1)) < task_count;) {
      try {
        run_task(task);
      } catch (...) {
        failures[task] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  record.trials = std::move(results);
  for (std::size_t s = 0; s < config.strategies.size(); ++s) {
    std::vector<RobustnessReport> reports;
    for (std::size_t t = 0; t < config.trials; ++t)
      reports.push_back(record.trials[s * config.trials + t].report);
    record.summaries.push_back(aggregate_trials(reports));
  }

  if (!config.output_dir.empty()) write_results(record, config.output_dir);
  return record;
}

}  // namespace netvuln
