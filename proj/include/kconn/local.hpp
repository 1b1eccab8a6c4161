#pragma once

#include <memory>
#include <optional>

#include "kconn/dfs.hpp"
#include "kconn/digraph.hpp"

namespace kconn {

/// A minimal subgraph of the base graph that contains the start vertex and
/// has a bounded boundary: at most k-1 crossing edges for the edge variants,
/// or all crossing edges sharing one vertex (!= start) for the vertex
/// variants. Boundary edges are reported in the original graph orientation.
struct IsolatedComponent {
  VertexSet vertices;
  std::vector<EdgeId> boundary;
  /// Vertex variants only: the single vertex all boundary edges depart from
  /// (out) or arrive at (in). Unset when the boundary is empty.
  std::optional<VertexId> separating_vertex;
  Orientation orientation = Orientation::out;
};

struct SearchStats {
  long long edges_scanned = 0;
  long long searches = 0;
};

/// Budget-bounded local searches on one immutable base graph. Scratch arrays
/// and overlays are owned by the instance and recycled across calls, so a
/// search costs O(delta)-ish work, not O(n). Not thread-safe; use one
/// instance per thread.
class LocalSearch {
public:
  explicit LocalSearch(const Digraph& g);

  /// 1-edge-out (or -in) component of u with <= 2*delta edges, if u has one
  /// with <= delta edges; nullopt guarantees no such component with <= delta
  /// edges exists. If u cannot reach 2*delta+1 edges the reachable set is
  /// returned as a 0-edge-out component.
  std::optional<IsolatedComponent> one_edge(VertexId u, int delta, Orientation o);

  /// 1-vertex-out (or -in) component analogue; the returned component has
  /// <= 2*delta edges and <= delta+1 vertices.
  std::optional<IsolatedComponent> one_vertex(VertexId u, int delta, Orientation o);

  /// (k-1)-edge-out (or -in) component of u with < (2k-1)(delta+1) edges, if
  /// one with <= delta edges exists. k >= 2.
  std::optional<IsolatedComponent> k_edge(VertexId u, int delta, int k, Orientation o);

  const SearchStats& stats() const { return stats_; }

private:
  struct Impl;
  const Digraph* g_;
  SearchStats stats_;
  std::unique_ptr<Impl> impl_;

  friend struct Impl;

public:
  ~LocalSearch();
};

// Free-function conveniences (each builds a throwaway LocalSearch).
std::optional<IsolatedComponent> one_edge_out(const Digraph& g, VertexId u, int delta);
std::optional<IsolatedComponent> one_edge_in(const Digraph& g, VertexId u, int delta);
std::optional<IsolatedComponent> one_vertex_out(const Digraph& g, VertexId u, int delta);
std::optional<IsolatedComponent> one_vertex_in(const Digraph& g, VertexId u, int delta);
std::optional<IsolatedComponent> k_edge_out(const Digraph& g, VertexId u, int delta, int k);
std::optional<IsolatedComponent> k_edge_in(const Digraph& g, VertexId u, int delta, int k);

}  // namespace kconn
