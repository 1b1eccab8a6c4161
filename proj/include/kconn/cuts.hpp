#pragma once

#include <optional>

#include "kconn/digraph.hpp"

namespace kconn {

struct EdgeCut {
  std::vector<EdgeId> edges;
  /// The side all cut edges leave from; removing `edges` leaves no path from
  /// this side to its complement.
  VertexSet side_source;
};

/// All edges whose deletion disconnects the strongly connected graph g.
/// Computed via dominator trees of g and its reverse, rooted at vertex 0.
/// Throws input_error if g is not strongly connected.
std::vector<EdgeId> strong_bridges(const Digraph& g);

/// All vertices whose removal disconnects the rest. Requires g strongly
/// connected and n >= 3 (input_error otherwise).
std::vector<VertexId> strong_articulation_points(const Digraph& g);

/// Some directed edge cut with at most k-1 edges, or nullopt if none exists.
/// k == 2 uses the strong-bridge oracle; k >= 3 uses capped unit max-flow
/// from vertex 0 to every other vertex and back. Requires g strongly
/// connected, k >= 2.
std::optional<EdgeCut> small_edge_cut(const Digraph& g, int k);

/// Reference oracle: delete each live edge in turn and recount SCCs.
std::vector<EdgeId> naive_strong_bridges(const Digraph& g);

/// Reference oracle: delete each vertex in turn and recount SCCs.
std::vector<VertexId> naive_strong_articulation_points(const Digraph& g);

struct MinCutResult {
  /// Global directed edge connectivity, capped at `cap`.
  int value = 0;
  /// True iff the connectivity is >= cap (witness is then meaningless).
  bool exceeds_cap = false;
  EdgeCut witness;
};

/// Global directed edge connectivity as min over v != s of
/// min(maxflow(s,v), maxflow(v,s)), with flows capped at `cap` augmenting
/// paths. Requires g strongly connected.
MinCutResult naive_min_cut(const Digraph& g, int cap);

}  // namespace kconn
