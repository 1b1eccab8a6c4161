#pragma once

#include "kconn/digraph.hpp"

namespace kconn {

struct SccDecomposition {
  /// Per-vertex component index.
  std::vector<int> component_of;
  /// Component members, sorted ascending within each component.
  std::vector<VertexSet> components;
  /// Component indices in a valid topological order of the condensation.
  std::vector<int> topo_order;
};

SccDecomposition strongly_connected_components(const Digraph& g);

/// True iff g (restricted to live edges) is strongly connected. Counts the
/// empty graph and a single vertex as strongly connected.
bool is_strongly_connected(const Digraph& g);

}  // namespace kconn
