#include "kconn/digraph.hpp"

#include <algorithm>

namespace kconn {

EdgeId Digraph::add_edge(VertexId tail, VertexId head) {
  EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.emplace_back(tail, head);
  alive_.push_back(1);
  out_adj_[tail].push_back(e);
  in_adj_[head].push_back(e);
  ++live_edges_;
  return e;
}

void Digraph::kill_edge(EdgeId e) {
  if (!alive_[e]) return;
  alive_[e] = 0;
  --live_edges_;
}

VertexId Digraph::add_vertex() {
  out_adj_.emplace_back();
  in_adj_.emplace_back();
  return static_cast<VertexId>(out_adj_.size()) - 1;
}

void Digraph::move_endpoint(EdgeId e, VertexId from, VertexId to) {
  auto& [t, h] = edges_[e];
  if (t == from) {
    auto& lst = out_adj_[from];
    lst.erase(std::find(lst.begin(), lst.end(), e));
    out_adj_[to].push_back(e);
    t = to;
  }
  if (h == from) {
    auto& lst = in_adj_[from];
    lst.erase(std::find(lst.begin(), lst.end(), e));
    in_adj_[to].push_back(e);
    h = to;
  }
}

Digraph from_edge_list(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  Digraph g(n);
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [t, h] = pairs[i];
    if (t < 0 || t >= n || h < 0 || h >= n) {
      throw input_error("edge " + std::to_string(i) + ": vertex id out of range");
    }
    if (t == h) continue;  // self-loop
    g.add_edge(t, h);
  }
  return g;
}

Digraph reverse_view(const Digraph& g) {
  Digraph r(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    r.add_edge(g.head(e), g.tail(e));
    if (!g.edge_alive(e)) r.kill_edge(e);
  }
  return r;
}

InducedSubgraph induced_subgraph(const Digraph& g, const VertexSet& members) {
  InducedSubgraph res;
  res.to_parent = members;
  std::sort(res.to_parent.begin(), res.to_parent.end());
  std::vector<VertexId> compact(g.vertex_count(), -1);
  for (size_t i = 0; i < res.to_parent.size(); ++i) {
    compact[res.to_parent[i]] = static_cast<VertexId>(i);
  }
  res.graph = Digraph(static_cast<int>(res.to_parent.size()));
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    VertexId t = compact[g.tail(e)];
    VertexId h = compact[g.head(e)];
    if (t >= 0 && h >= 0) res.graph.add_edge(t, h);
  }
  return res;
}

}  // namespace kconn
