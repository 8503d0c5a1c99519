#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netvuln/attacks.hpp"
#include "netvuln/curve.hpp"
#include "netvuln/edge_list.hpp"
#include "netvuln/generators.hpp"
#include "netvuln/robustness.hpp"

namespace netvuln {

/// Parses "ws:n=<n>,k=<k>,p=<p>[,seed=<s>]". Missing keys keep the WsParams
/// defaults; an absent seed is filled in from the campaign seed.
struct GeneratorSpec {
  WsParams params;
  bool explicit_seed = false;

  static GeneratorSpec parse(std::string_view text);
  std::string to_string() const;
};

struct RunConfig {
  std::optional<std::filesystem::path> input;
  std::optional<GeneratorSpec> generate;
  /// Network column value; defaults to the input file stem or "ws".
  std::string network_name;
  std::vector<Strategy> strategies;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<double> alphas = kDefaultAlphas;
  /// Empty: run_campaign does not write anything.
  std::filesystem::path output_dir;
  IndexOptions index;
  bool emit_curves = false;
  /// 0 means one worker per hardware thread.
  std::size_t workers = 0;
};

/// Throws ParameterError on: both or neither of input/generate, no
/// strategies, repeated strategies, trials == 0, bad alpha list.
void validate(const RunConfig& config);

/// Seed of trial `trial` of `strategy`: a hash of (base seed, canonical
/// strategy index, trial index). Planning and bundle ordering draw separate
/// streams from it.
std::uint64_t trial_seed(std::uint64_t base, Strategy strategy, std::size_t trial);

struct GraphInfo {
  std::string name;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double mean_degree = 0;
  std::size_t giant_component = 0;
  GraphFingerprint fingerprint;

  bool connected() const { return giant_component == nodes; }
};

GraphInfo describe(const Graph& g, std::string name);

struct TrialResult {
  RobustnessReport report;
  std::optional<PerformanceCurve> curve;  // kept when curve emission is on
};

struct ResultRecord {
  GraphInfo graph;
  RunConfig config;
  /// Ordered by (position of strategy in config.strategies, trial).
  std::vector<TrialResult> trials;
  /// One per strategy, same order as config.strategies.
  std::vector<TrialSummary> summaries;
  std::vector<std::string> warnings;
};

/// Loads or generates the graph named by the config.
LabeledGraph load_network(const RunConfig& config);

/// Runs every (strategy, trial) pair on up to config.workers threads.
/// Results do not depend on the worker count. Writes outputs when
/// config.output_dir is set.
ResultRecord run_campaign(const RunConfig& config);

/// Same, on an already loaded graph.
ResultRecord run_campaign(const RunConfig& config, const Graph& g, std::string network_name);

}  // namespace netvuln
