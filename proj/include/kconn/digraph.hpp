#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kconn {

using VertexId = int32_t;
using EdgeId = int32_t;

/// A sorted list of vertex ids (no duplicates).
using VertexSet = std::vector<VertexId>;

/// Malformed input (bad file, id out of range, bad parameter).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Orientation { out, in };

/// Indexed directed multigraph. Parallel edges are allowed, self-loops are
/// not (they are stripped at ingestion). Edges can be deleted by tombstone;
/// dead edges keep their id but are skipped by every traversal.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n) : out_adj_(n), in_adj_(n) {}

  int vertex_count() const { return static_cast<int>(out_adj_.size()); }
  /// Number of live edges.
  int edge_count() const { return live_edges_; }
  /// Number of edge slots ever created, dead ones included.
  int edge_slots() const { return static_cast<int>(edges_.size()); }

  VertexId tail(EdgeId e) const { return edges_[e].first; }
  VertexId head(EdgeId e) const { return edges_[e].second; }
  bool edge_alive(EdgeId e) const { return alive_[e] != 0; }

  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_adj_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_adj_[v]; }

  EdgeId add_edge(VertexId tail, VertexId head);
  void kill_edge(EdgeId e);
  VertexId add_vertex();

  /// Replace every occurrence of endpoint `from` on edge `e` with `to`,
  /// updating both adjacency lists. Used by the split operation.
  void move_endpoint(EdgeId e, VertexId from, VertexId to);

private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<char> alive_;
  std::vector<std::vector<EdgeId>> out_adj_;
  std::vector<std::vector<EdgeId>> in_adj_;
  int live_edges_ = 0;
};

/// Build a graph from an edge list. Self-loops are dropped; parallel edges
/// kept. Throws input_error (with the offending line index) on a bad id.
Digraph from_edge_list(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs);

/// A copy of g with every edge direction flipped. Edge ids are preserved.
Digraph reverse_view(const Digraph& g);

struct InducedSubgraph {
  Digraph graph;
  /// Compact vertex id -> id in the parent graph (sorted ascending).
  std::vector<VertexId> to_parent;
};

/// Subgraph induced by `members`: exactly the live edges with both endpoints
/// in the set, re-indexed to compact ids. Edge order follows parent edge ids.
InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& members);

}  // namespace kconn
