#pragma once

#include <string>
#include <utility>

#include "kconn/digraph.hpp"

namespace kconn {

struct SolveStats {
  long long m0 = 0;             // live edges of the input graph
  int delta = 0;                // local-search budget actually used
  long long searches = 0;       // local searches performed
  long long edges_scanned = 0;  // edges scanned by local searches
  int recursion_depth = 0;      // deepest recursive call reached
  long long splits = 0;         // vertex split operations (2VCS only)
  int aux_peak = 0;             // most auxiliary vertices alive in one call
  long long worklist_violations = 0;  // soft check, see solvers.cpp
};

struct SolveOptions {
  /// Report single-vertex components too (they are vacuously k-connected).
  bool include_singletons = false;
  /// Local-search budget; 0 means floor(sqrt(m0)).
  int delta_override = 0;
};

/// Answer of a maximal-subgraph computation: vertex sets over the ids of the
/// original input graph. 2ECS/kECS sets are pairwise disjoint; 2VCS sets may
/// share at most one vertex. Sets are sorted internally and ordered by
/// minimum member.
struct ComponentReport {
  std::vector<VertexSet> components;
  std::string mode;
  SolveStats stats;
};

/// Maximal 2-edge-connected subgraphs of an arbitrary digraph.
ComponentReport max_2ecs(const Digraph& g, const SolveOptions& opts = {});

/// Maximal 2-vertex-connected subgraphs (each has >= 3 vertices).
ComponentReport max_2vcs(const Digraph& g, const SolveOptions& opts = {});

/// Maximal k-edge-connected subgraphs, k >= 2 (throws input_error otherwise).
ComponentReport max_kecs(const Digraph& g, int k, const SolveOptions& opts = {});

/// Undirected variant: every edge becomes a bidirected pair, the budget
/// defaults to ceil(m / sqrt(n)) with m the directed edge count.
ComponentReport max_kecs_undirected(int n,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges,
                                    int k, const SolveOptions& opts = {});

/// Move every edge between x and the vertices of n_set onto a fresh copy of
/// x and return the copy. origin gains one entry mapping the copy to
/// origin[x]. The edge count is unchanged (asserted).
VertexId split(Digraph& g, std::vector<VertexId>& origin, VertexId x,
               const std::vector<VertexId>& n_set);

}  // namespace kconn
