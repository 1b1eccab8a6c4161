#pragma once

#include <functional>
#include <string>

#include "kconn/digraph.hpp"

namespace kconn {

/// Same shape as ComponentReport, produced by the slow reference algorithms.
struct OracleReport {
  std::vector<VertexSet> components;
  std::string mode;
  std::string provenance = "oracle";
  /// Edges examined by the oracle's reachability searches (the scaling-probe
  /// counter for the baseline decomposition).
  long long edge_scans = 0;
};

/// Fixpoint of "remove one strong bridge per SCC": the quadratic reference
/// decomposition. Bridges are found by per-edge deletion + reachability and
/// removed in edge-id order. Singleton components are suppressed.
OracleReport baseline_2ecs(const Digraph& g);

/// Reference 2-vertex decomposition: repeatedly remove the lowest-id strong
/// articulation point x (found by per-vertex deletion) and recurse on
/// D_i + {x} for every SCC D_i of the remainder. Components have >= 3
/// vertices; duplicates and non-maximal subsets are dropped.
OracleReport baseline_2vcs(const Digraph& g);

/// Fixpoint deleting a < k edge cut (via naive_min_cut) per SCC.
OracleReport baseline_kecs(const Digraph& g, int k);

/// min(maxflow(u,v), maxflow(v,u)) computed by BFS augmenting paths, capped.
int pairwise_edge_connectivity(const Digraph& g, VertexId u, VertexId v, int cap);

enum class ComponentKind { edge_out, edge_in, vertex_out, vertex_in };

/// All minimal vertex sets S containing u such that (edge kinds) at most k-1
/// edges leave/enter S, or (vertex kinds) u has no edge leaving/entering S
/// and at most k-1 vertices of S do. Minimal: no proper subset containing u
/// qualifies. Exhaustive over subsets; refuses n > 20.
std::vector<VertexSet> enumerate_isolated_components(const Digraph& g, VertexId u,
                                                     int k, ComponentKind kind);

/// Greedily delete edges, then vertices, while `still_fails` stays true.
/// Returns the shrunken graph (test-only debugging aid).
Digraph shrink_counterexample(const Digraph& g,
                              const std::function<bool(const Digraph&)>& still_fails);

}  // namespace kconn
