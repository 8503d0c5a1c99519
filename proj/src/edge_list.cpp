#include "netvuln/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "netvuln/errors.hpp"

namespace netvuln {

namespace {

NodeId intern(LabeledGraph& g, const std::string& label) {
  auto [it, inserted] = g.ids.try_emplace(label, static_cast<NodeId>(g.labels.size()));
  if (inserted) g.labels.push_back(label);
  return it->second;
}

}  // namespace

LabeledGraph parse_edge_list(std::istream& in) {
  LabeledGraph out;
  std::unordered_map<std::uint64_t, std::size_t> first_line;
  std::vector<std::string> problems;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b)) throw ParseError(lineno, "expected two node labels");
    if (fields >> extra) throw ParseError(lineno, "expected two node labels, found more fields");

    if (a == b) {
      problems.push_back("line " + std::to_string(lineno) + ": self-loop on '" + a + "'");
      continue;
    }
    const NodeId ia = intern(out, a);
    const NodeId ib = intern(out, b);
    const EdgeId e = EdgeId::of(ia, ib);
    auto [it, fresh] = first_line.try_emplace(e.key(), lineno);
    if (!fresh) {
      problems.push_back("line " + std::to_string(lineno) + ": duplicate edge '" + a + " " + b +
                         "' (first seen on line " + std::to_string(it->second) + ")");
      continue;
    }
    out.edge_order.push_back(e);
  }
  if (in.bad()) throw IoError("read failure while parsing edge list");

  if (!problems.empty()) {
    std::string msg = "edge list is not a simple graph:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
  if (out.edge_order.empty()) throw ValidationError("edge list contains no edges");

  out.graph = Graph::from_edges(out.labels.size(), out.edge_order);
  return out;
}

LabeledGraph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return parse_edge_list(in);
}

void write_edge_list(const LabeledGraph& g, std::ostream& out) {
  for (const auto& e : g.edge_order)
    if (g.graph.has_edge(e)) out << g.labels.at(e.u) << ' ' << g.labels.at(e.v) << '\n';
  if (!out) throw IoError("write failure while writing edge list");
}

LabeledGraph with_index_labels(Graph g) {
  LabeledGraph out;
  out.labels.reserve(g.node_count());
  for (NodeId n = 0; n < g.node_count(); ++n) {
    out.labels.push_back(std::to_string(n));
    out.ids.emplace(out.labels.back(), n);
  }
  out.edge_order = g.edges();
  out.graph = std::move(g);
  return out;
}

}  // namespace netvuln
