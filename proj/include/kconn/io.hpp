#pragma once

#include <string>
#include <utility>

#include "kconn/digraph.hpp"
#include "kconn/solvers.hpp"

namespace kconn {

/// Parsed graph file: "n m d|u" header then m "tail head" lines, 0-based,
/// '#' starts a comment, blank lines ignored.
struct GraphFile {
  int n = 0;
  bool directed = true;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

/// Throws input_error with a 1-based line number on malformed input.
GraphFile parse_graph(const std::string& text);

/// Directed files map one line to one edge; undirected files get both
/// directions per line.
Digraph to_digraph(const GraphFile& f);

std::string emit_graph_file(const GraphFile& f);

enum class ReportFormat { text, json };

/// text: one line per component, ids sorted, components ordered by minimum
/// member; stats appended as '# key value' lines when requested. json:
/// components plus the full stats object. Deterministic bytes.
std::string emit_report(const ComponentReport& rep, ReportFormat fmt, bool with_stats);

}  // namespace kconn
