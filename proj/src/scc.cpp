#include "kconn/scc.hpp"

#include <algorithm>

namespace kconn {

// Iterative Tarjan. Components are completed in reverse topological order of
// the condensation, so the topological order is the completion order reversed.
SccDecomposition strongly_connected_components(const Digraph& g) {
  int n = g.vertex_count();
  SccDecomposition res;
  res.component_of.assign(n, -1);

  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  int next_index = 0;

  struct Frame {
    VertexId v;
    size_t i;
  };
  std::vector<Frame> frames;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      VertexId v = f.v;
      const auto& adj = g.out_edges(v);
      bool descended = false;
      while (f.i < adj.size()) {
        EdgeId e = adj[f.i++];
        if (!g.edge_alive(e)) continue;
        VertexId w = g.head(e);
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      frames.pop_back();
      if (!frames.empty()) {
        lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
      }
      if (lowlink[v] == index[v]) {
        int comp = static_cast<int>(res.components.size());
        VertexSet members;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          res.component_of[w] = comp;
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        res.components.push_back(std::move(members));
      }
    }
  }

  int c = static_cast<int>(res.components.size());
  res.topo_order.resize(c);
  for (int i = 0; i < c; ++i) res.topo_order[i] = c - 1 - i;
  return res;
}

bool is_strongly_connected(const Digraph& g) {
  if (g.vertex_count() <= 1) return true;
  return strongly_connected_components(g).components.size() == 1;
}

}  // namespace kconn
