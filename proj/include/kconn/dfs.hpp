#pragma once

#include "kconn/digraph.hpp"

namespace kconn {

/// A set of edges currently treated as direction-reversed on top of a base
/// graph. An overlay is bound to one traversal orientation: in `out`
/// orientation a reversed edge (t,h) is traversed h -> t, so it is indexed as
/// an extra departure at h; in `in` orientation the roles swap.
///
/// Per-vertex extra lists are append-only (each edge gets at most one entry,
/// live exactly while the edge is reversed), so cursors held by a paused
/// traversal survive nested toggle/untoggle pairs without duplication.
class ResidualOverlay {
public:
  ResidualOverlay(const Digraph& g, Orientation orient)
      : g_(&g),
        orient_(orient),
        reversed_(g.edge_slots(), 0),
        has_entry_(g.edge_slots(), 0),
        extra_(g.vertex_count()) {}

  Orientation orientation() const { return orient_; }
  bool is_reversed(EdgeId e) const { return reversed_[e] != 0; }
  const std::vector<EdgeId>& extra_at(VertexId v) const { return extra_[v]; }

  /// Flip the reversal state of e. Throws invariant_error on a dead edge.
  void toggle(EdgeId e);

  /// Restore every edge to its original direction and drop all extra entries.
  void clear();

private:
  const Digraph* g_;
  Orientation orient_;
  std::vector<char> reversed_;
  std::vector<char> has_entry_;
  std::vector<std::vector<EdgeId>> extra_;
  std::vector<EdgeId> touched_edges_;
  std::vector<VertexId> touched_vertices_;
};

/// Toggle each edge of `path` in order (an already-reversed edge returns to
/// its original orientation).
void apply_path_reversal(ResidualOverlay& overlay, const std::vector<EdgeId>& path);

/// Result of a budget-bounded DFS. Visited vertices are stored in visit order
/// ("slots"); slot 0 is the root. Parallel arrays are indexed by slot.
struct DfsRun {
  VertexId root = -1;
  int budget = 0;
  int edges_scanned = 0;
  /// True iff the budget ran out while an unscanned edge was still pending.
  bool stopped_early = false;

  std::vector<VertexId> vertex;
  std::vector<int> parent_slot;    // -1 for the root
  std::vector<EdgeId> parent_edge; // -1 for the root
  std::vector<int> depth;
  /// Edges charged to the vertex itself (out-edges scanned from it).
  std::vector<int> charge;
  /// Subtree charge sum w(v).
  std::vector<int> weight;

  int slot_of(VertexId v) const;  // linear scan; -1 if not visited
  bool visited(VertexId v) const { return slot_of(v) >= 0; }
  int charge_of(VertexId v) const { return charge[slot_of(v)]; }
  int weight_of(VertexId v) const { return weight[slot_of(v)]; }
};

/// Reusable vertex->slot map with epoch stamping, so repeated searches on a
/// large graph avoid O(n) clears.
class DfsScratch {
public:
  void begin(int n);
  bool seen(VertexId v) const { return stamp_[v] == epoch_; }
  int slot(VertexId v) const { return slot_[v]; }
  void assign(VertexId v, int s) {
    stamp_[v] = epoch_;
    slot_[v] = s;
  }

private:
  std::vector<int> slot_;
  std::vector<uint32_t> stamp_;
  uint32_t epoch_ = 0;
};

/// DFS from u scanning at most `budget` edges. Edges are examined in
/// adjacency (insertion) order; overlay reversals are honored when an overlay
/// is given (its orientation must match `orient`). An edge is charged to the
/// vertex it is scanned from at the moment it is first examined; the search
/// halts mid-scan as soon as the budget is exhausted. Dead edges and edges
/// pointing the wrong way under the overlay are skipped without charge.
DfsRun bounded_dfs(const Digraph& g, const ResidualOverlay* overlay, VertexId u,
                   int budget, Orientation orient = Orientation::out,
                   DfsScratch* scratch = nullptr);

/// Slots of the maximal root-anchored tree path of vertices with
/// weight >= threshold. Throws invariant_error if the qualifying vertices do
/// not form a single tree path.
std::vector<int> heavy_path_slots(const DfsRun& run, int threshold);

/// Same, as vertex ids from the root.
std::vector<VertexId> heavy_path(const DfsRun& run, int threshold);

}  // namespace kconn
