#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "netvuln/graph.hpp"

namespace netvuln {

/// Graph plus the text labels its dense ids were assigned from. Ids follow
/// first appearance in the input.
struct LabeledGraph {
  Graph graph{1};
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  /// Edges in input order.
  std::vector<EdgeId> edge_order;
};

/// Reads a whitespace-separated edge list: one "a b" pair per line, blank
/// lines and lines starting with '#' skipped.
///
/// Lines with other than two fields raise ParseError. Self-loops and
/// repeated edges (in either orientation) raise ValidationError naming
/// every offending line. An input with no edges raises ValidationError.
LabeledGraph parse_edge_list(std::istream& in);

/// Opens and parses path; IoError when the file cannot be read.
LabeledGraph load_edge_list(const std::filesystem::path& path);

/// Writes the live edges in edge_order using the original labels. For a
/// parsed graph, parsing the output again reproduces the same label-to-id
/// mapping.
void write_edge_list(const LabeledGraph& g, std::ostream& out);

/// Labels are the decimal ids; edge_order is the sorted edge list.
LabeledGraph with_index_labels(Graph g);

}  // namespace netvuln
