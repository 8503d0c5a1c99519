// netvuln: invulnerability index of a network under node and edge attacks.
//
//   netvuln run --input graph.txt --attacks rn-edge,id-edge --trials 10 --out results/
//   netvuln run --generate ws:n=1000,k=10,p=0.02 --attacks rn-edge,ib-node --seed 7 --out ws/
//   netvuln inspect --input graph.txt
//   netvuln compare --input graph.txt --rule id --seed 3
//
// Exit codes: 0 success, 2 validation error, 3 I/O error, 1 anything else.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netvuln/campaign.hpp"
#include "netvuln/errors.hpp"
#include "netvuln/results.hpp"
#include "netvuln/rng.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct SourceOptions {
  std::string input;
  std::string generate;
  std::string name;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  auto* in = cmd->add_option("--input", src.input, "Edge-list file (two labels per line)");
  auto* gen = cmd->add_option("--generate", src.generate, "Generator spec, ws:n=<n>,k=<k>,p=<p>[,seed=<s>]");
  in->excludes(gen);
  cmd->add_option("--name", src.name, "Network name used in outputs");
}

void apply_source(const SourceOptions& src, netvuln::RunConfig& cfg) {
  if (!src.input.empty()) cfg.input = src.input;
  if (!src.generate.empty()) cfg.generate = netvuln::GeneratorSpec::parse(src.generate);
  cfg.network_name = src.name;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else if (c != ' ') {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw netvuln::ParameterError("bad alpha value '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void print_info(const netvuln::GraphInfo& info) {
  std::printf("network          %s\n", info.name.c_str());
  std::printf("nodes            %zu\n", info.nodes);
  std::printf("edges            %zu\n", info.edges);
  std::printf("mean degree      %.2f\n", info.mean_degree);
  std::printf("giant component  %zu (%s)\n", info.giant_component,
              info.connected() ? "connected" : "not connected");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invulnerability index of complex networks under node and edge attacks"};
  app.require_subcommand(1);

  SourceOptions src;
  std::string attacks = "rn-edge,id-edge,ib-edge,rn-node,id-node,ib-node";
  std::string alphas = "0.2,0.5,0.7,1.0";
  netvuln::RunConfig cfg;
  std::string out_dir;

  auto* run = app.add_subcommand("run", "Run an attack campaign and write indexes.csv, summary.json");
  add_source_options(run, src);
  run->add_option("--attacks", attacks, "Comma-separated strategies")->capture_default_str();
  run->add_option("--trials", cfg.trials, "Trials per strategy")->capture_default_str();
  run->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  run->add_option("--alphas", alphas, "Removed-edge fractions to report")->capture_default_str();
  run->add_flag("--paper-compat,!--no-paper-compat", cfg.index.paper_compat,
                "Evaluate with s_E = 0 (default on)");
  run->add_flag("--exact", cfg.index.exact, "Integrate to exactly alpha instead of ceil(alpha*E)/E");
  run->add_flag("--emit-curves", cfg.emit_curves, "Write curves/<strategy>-<trial>.csv");
  run->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")->capture_default_str();
  run->add_option("--out", out_dir, "Output directory")->required();

  auto* inspect = app.add_subcommand("inspect", "Print node/edge counts and mean degree");
  add_source_options(inspect, src);
  std::uint64_t inspect_seed = 0;
  inspect->add_option("--seed", inspect_seed, "Generator seed when --generate has none");

  std::string rule_name = "id";
  std::uint64_t compare_seed = 0;
  bool same_bundles = false;
  auto* compare = app.add_subcommand("compare", "Node attack vs the edge attack expanded from it");
  add_source_options(compare, src);
  compare->add_option("--rule", rule_name, "rn, id or ib")->capture_default_str();
  compare->add_option("--seed", compare_seed, "Base seed")->capture_default_str();
  compare->add_option("--alphas", alphas, "Removed-edge fractions to report")->capture_default_str();
  compare->add_flag("--same-bundles", same_bundles, "Use one bundle order for both attacks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*run) {
      apply_source(src, cfg);
      cfg.strategies.clear();
      for (const auto& name : split_list(attacks)) cfg.strategies.push_back(netvuln::parse_strategy(name));
      cfg.alphas = parse_alphas(alphas);
      cfg.output_dir = out_dir;
      const auto record = netvuln::run_campaign(cfg);
      for (const auto& w : record.warnings) std::cerr << "warning: " << w << '\n';
      std::printf("%-8s %6s", "strategy", "trials");
      for (double a : cfg.alphas) std::printf("  I_%-5s", netvuln::format_number(a).c_str());
      std::printf("\n");
      for (const auto& s : record.summaries) {
        std::printf("%-8s %6zu", netvuln::to_string(s.strategy).c_str(), s.trials);
        for (const auto& st : s.per_alpha) std::printf("  %7s", netvuln::format_index(st.mean).c_str());
        std::printf("\n");
      }
      std::printf("results written to %s\n", out_dir.c_str());
    } else if (*inspect) {
      cfg.seed = inspect_seed;
      apply_source(src, cfg);
      std::string name = src.name;
      if (name.empty()) name = cfg.input ? cfg.input->stem().string() : std::string("ws");
      print_info(netvuln::describe(netvuln::load_network(cfg).graph, name));
    } else if (*compare) {
      cfg.seed = compare_seed;
      apply_source(src, cfg);
      const auto network = netvuln::load_network(cfg);
      const auto rule = netvuln::parse_strategy(rule_name + "-node").rule;
      netvuln::TransferSeeds seeds{
          netvuln::derive_seed(compare_seed, netvuln::StreamPurpose::plan),
          netvuln::derive_seed(compare_seed, netvuln::StreamPurpose::node_bundles),
          netvuln::derive_seed(compare_seed, netvuln::StreamPurpose::edge_transfer)};
      if (same_bundles) seeds.edge_transfer = seeds.node_bundles;
      const auto cmp = netvuln::compare_node_edge(network.graph, rule, seeds, parse_alphas(alphas));
      std::printf("%-8s %8s %8s %8s\n", "alpha", "node", "edge", "error");
      for (std::size_t i = 0; i < cmp.alphas.size(); ++i)
        std::printf("%-8s %8s %8s %8s\n", netvuln::format_number(cmp.alphas[i]).c_str(),
                    netvuln::format_index(cmp.node_index[i]).c_str(),
                    netvuln::format_index(cmp.edge_index[i]).c_str(),
                    netvuln::format_index(cmp.error[i]).c_str());
      std::printf("max |error| %.3f\n", cmp.max_abs_error());
    }
  } catch (const netvuln::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const netvuln::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const netvuln::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const netvuln::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
