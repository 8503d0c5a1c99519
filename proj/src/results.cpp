#include "netvuln/results.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "netvuln/errors.hpp"

namespace netvuln {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string format_index(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  std::string out = buf;
  if (out == "-0.000") out = "0.000";
  return out;
}

namespace {

// Round-trips through the 6-digit text form so the JSON carries the same
// precision as the CSV files.
double six_digits(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

}  // namespace

void write_indexes_csv(const ResultRecord& record, std::ostream& out) {
  out << "network,strategy,trial,alpha,area,index,verdict\n";
  for (const auto& trial : record.trials) {
    const auto& rep = trial.report;
    for (const auto& sub : rep.subindexes) {
      out << record.graph.name << ',' << to_string(rep.strategy) << ',' << rep.trial << ','
          << format_number(sub.alpha) << ',' << format_number(sub.area) << ','
          << format_index(sub.index) << ',' << to_string(sub.verdict) << '\n';
    }
  }
}

void write_curve_csv(const PerformanceCurve& curve, std::ostream& out) {
  out << "removed_edges,r,s\n";
  for (std::size_t i = 0; i < curve.s.size(); ++i)
    out << i << ',' << format_number(curve.r(i)) << ',' << format_number(curve.s[i]) << '\n';
}

std::string summary_json(const ResultRecord& record) {
  const auto& cfg = record.config;
  json doc;
  doc["network"] = {
      {"name", record.graph.name},
      {"nodes", record.graph.nodes},
      {"edges", record.graph.edges},
      {"mean_degree", six_digits(record.graph.mean_degree)},
      {"giant_component", record.graph.giant_component},
      {"connected", record.graph.connected()},
  };

  json config;
  if (cfg.input) config["input"] = cfg.input->string();
  if (cfg.generate) config["generate"] = cfg.generate->to_string();
  config["strategies"] = json::array();
  for (const auto& s : cfg.strategies) config["strategies"].push_back(to_string(s));
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  config["alphas"] = json::array();
  for (double a : cfg.alphas) config["alphas"].push_back(six_digits(a));
  config["paper_compat"] = cfg.index.paper_compat;
  config["exact"] = cfg.index.exact;
  config["emit_curves"] = cfg.emit_curves;
  doc["config"] = std::move(config);

  doc["strategies"] = json::array();
  for (const auto& summary : record.summaries) {
    json entry{{"strategy", to_string(summary.strategy)}, {"trials", summary.trials}};
    entry["alphas"] = json::array();
    for (const auto& st : summary.per_alpha) {
      entry["alphas"].push_back({{"alpha", six_digits(st.alpha)},
                                 {"mean", six_digits(st.mean)},
                                 {"std", six_digits(st.stddev)},
                                 {"min", six_digits(st.min)},
                                 {"max", six_digits(st.max)}});
    }
    doc["strategies"].push_back(std::move(entry));
  }
  doc["warnings"] = record.warnings;
  return doc.dump(2) + "\n";
}

void write_results(const ResultRecord& record, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

  const auto indexes = dir / "indexes.csv";
  auto csv = open_for_write(indexes);
  write_indexes_csv(record, csv);
  finish(csv, indexes);

  const auto summary = dir / "summary.json";
  auto js = open_for_write(summary);
  js << summary_json(record);
  finish(js, summary);

  bool made_curve_dir = false;
  for (const auto& trial : record.trials) {
    if (!trial.curve) continue;
    if (!made_curve_dir) {
      fs::create_directories(dir / "curves", ec);
      if (ec) throw IoError("cannot create '" + (dir / "curves").string() + "': " + ec.message());
      made_curve_dir = true;
    }
    const auto path = dir / "curves" /
                      (to_string(trial.report.strategy) + "-" + std::to_string(trial.report.trial) + ".csv");
    auto out = open_for_write(path);
    write_curve_csv(*trial.curve, out);
    finish(out, path);
  }
}

}  // namespace netvuln
