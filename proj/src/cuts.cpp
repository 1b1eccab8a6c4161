#include "kconn/cuts.hpp"

#include <algorithm>
#include <queue>

#include "kconn/scc.hpp"

namespace kconn {

namespace {

// ---------------------------------------------------------------------------
// Dominator tree (Lengauer-Tarjan, simple version with path compression),
// over live edges only. Orientation `out` treats the graph as a flow graph
// from `root`; `in` does the same on the reverse graph.
// ---------------------------------------------------------------------------

struct Dominators {
  std::vector<VertexId> idom;  // -1 for root and unreachable vertices
  std::vector<int> dfn;        // -1 for unreachable
  std::vector<VertexId> by_dfn;
};

Dominators dominators(const Digraph& g, VertexId root, Orientation o) {
  int n = g.vertex_count();
  Dominators d;
  d.idom.assign(n, -1);
  d.dfn.assign(n, -1);

  std::vector<VertexId> parent(n, -1);
  // DFS numbering.
  {
    struct Frame {
      VertexId v;
      size_t i;
    };
    std::vector<Frame> st;
    d.dfn[root] = 0;
    d.by_dfn.push_back(root);
    st.push_back({root, 0});
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& adj = o == Orientation::out ? g.out_edges(f.v) : g.in_edges(f.v);
      bool down = false;
      while (f.i < adj.size()) {
        EdgeId e = adj[f.i++];
        if (!g.edge_alive(e)) continue;
        VertexId w = o == Orientation::out ? g.head(e) : g.tail(e);
        if (d.dfn[w] != -1) continue;
        d.dfn[w] = static_cast<int>(d.by_dfn.size());
        d.by_dfn.push_back(w);
        parent[w] = f.v;
        st.push_back({w, 0});
        down = true;
        break;
      }
      if (!down) st.pop_back();
    }
  }

  int cnt = static_cast<int>(d.by_dfn.size());
  std::vector<int> semi(n, 0);
  std::vector<VertexId> ancestor(n, -1), label(n, 0);
  std::vector<std::vector<VertexId>> bucket(n);
  for (VertexId v = 0; v < n; ++v) {
    label[v] = v;
    if (d.dfn[v] != -1) semi[v] = d.dfn[v];
  }

  std::vector<VertexId> comp_path;
  auto eval = [&](VertexId v) -> VertexId {
    if (ancestor[v] == -1) return v;
    comp_path.clear();
    VertexId x = v;
    while (ancestor[ancestor[x]] != -1) {
      comp_path.push_back(x);
      x = ancestor[x];
    }
    for (auto it = comp_path.rbegin(); it != comp_path.rend(); ++it) {
      VertexId y = *it;
      if (semi[label[ancestor[y]]] < semi[label[y]]) label[y] = label[ancestor[y]];
      ancestor[y] = ancestor[ancestor[y]];
    }
    return label[v];
  };

  for (int i = cnt - 1; i >= 1; --i) {
    VertexId w = d.by_dfn[i];
    const auto& preds = o == Orientation::out ? g.in_edges(w) : g.out_edges(w);
    for (EdgeId e : preds) {
      if (!g.edge_alive(e)) continue;
      VertexId u = o == Orientation::out ? g.tail(e) : g.head(e);
      if (d.dfn[u] == -1) continue;
      VertexId q = eval(u);
      semi[w] = std::min(semi[w], semi[q]);
    }
    bucket[d.by_dfn[semi[w]]].push_back(w);
    ancestor[w] = parent[w];
    for (VertexId v : bucket[parent[w]]) {
      VertexId q = eval(v);
      d.idom[v] = semi[q] < semi[v] ? q : parent[w];
    }
    bucket[parent[w]].clear();
  }
  for (int i = 1; i < cnt; ++i) {
    VertexId w = d.by_dfn[i];
    if (d.idom[w] != d.by_dfn[semi[w]]) d.idom[w] = d.idom[d.idom[w]];
  }
  return d;
}

// Preorder intervals of the dominator tree for subtree tests.
struct DomIntervals {
  std::vector<int> pre, post;  // x in subtree(v)  <=>  pre[v] <= pre[x] < post[v]
};

DomIntervals dom_intervals(const Dominators& d, int n) {
  DomIntervals iv;
  iv.pre.assign(n, -1);
  iv.post.assign(n, -1);
  std::vector<std::vector<VertexId>> children(n);
  for (VertexId v = 0; v < n; ++v) {
    if (d.idom[v] != -1) children[d.idom[v]].push_back(v);
  }
  int clock = 0;
  struct Frame {
    VertexId v;
    size_t i;
  };
  std::vector<Frame> st;
  if (!d.by_dfn.empty()) {
    VertexId root = d.by_dfn[0];
    iv.pre[root] = clock++;
    st.push_back({root, 0});
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.i < children[f.v].size()) {
        VertexId c = children[f.v][f.i++];
        iv.pre[c] = clock++;
        st.push_back({c, 0});
      } else {
        iv.post[f.v] = clock;
        st.pop_back();
      }
    }
  }
  return iv;
}

void require_strongly_connected(const Digraph& g, const char* who) {
  if (!is_strongly_connected(g)) {
    throw input_error(std::string(who) + ": graph is not strongly connected");
  }
}

// Flow-graph bridges rooted at `root` in orientation o: an edge (u,v) is a
// bridge iff it is the only live entering edge of v whose tail lies outside
// the dominator subtree of v.
void collect_bridges(const Digraph& g, VertexId root, Orientation o,
                     std::vector<char>& is_bridge) {
  Dominators d = dominators(g, root, o);
  DomIntervals iv = dom_intervals(d, g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == root || d.dfn[v] == -1) continue;
    EdgeId candidate = -1;
    int outside = 0;
    const auto& entering = o == Orientation::out ? g.in_edges(v) : g.out_edges(v);
    for (EdgeId e : entering) {
      if (!g.edge_alive(e)) continue;
      VertexId u = o == Orientation::out ? g.tail(e) : g.head(e);
      bool inside = iv.pre[v] <= iv.pre[u] && iv.pre[u] < iv.post[v];
      if (!inside) {
        ++outside;
        candidate = e;
        if (outside > 1) break;
      }
    }
    if (outside == 1) is_bridge[candidate] = 1;
  }
}

// ---------------------------------------------------------------------------
// Capped unit-capacity max flow (fast path): DFS augmenting paths over the
// residual graph.
// ---------------------------------------------------------------------------

struct UnitFlow {
  const Digraph& g;
  std::vector<char> flow;      // per edge slot
  std::vector<EdgeId> touched;
  std::vector<uint32_t> mark;
  uint32_t epoch = 0;
  std::vector<EdgeId> pred_edge;
  std::vector<char> pred_back;

  explicit UnitFlow(const Digraph& graph)
      : g(graph),
        flow(graph.edge_slots(), 0),
        mark(graph.vertex_count(), 0),
        pred_edge(graph.vertex_count(), -1),
        pred_back(graph.vertex_count(), 0) {}

  void reset() {
    for (EdgeId e : touched) flow[e] = 0;
    touched.clear();
  }

  bool augment(VertexId s, VertexId t) {
    ++epoch;
    mark[s] = epoch;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      if (v == t) break;
      for (EdgeId e : g.out_edges(v)) {
        if (!g.edge_alive(e) || flow[e]) continue;
        VertexId w = g.head(e);
        if (mark[w] == epoch) continue;
        mark[w] = epoch;
        pred_edge[w] = e;
        pred_back[w] = 0;
        stack.push_back(w);
      }
      for (EdgeId e : g.in_edges(v)) {
        if (!g.edge_alive(e) || !flow[e]) continue;
        VertexId w = g.tail(e);
        if (mark[w] == epoch) continue;
        mark[w] = epoch;
        pred_edge[w] = e;
        pred_back[w] = 1;
        stack.push_back(w);
      }
    }
    if (mark[t] != epoch) return false;
    VertexId v = t;
    while (v != s) {
      EdgeId e = pred_edge[v];
      if (pred_back[v]) {
        flow[e] = 0;
        v = g.head(e);
      } else {
        flow[e] = 1;
        touched.push_back(e);
        v = g.tail(e);
      }
    }
    return true;
  }

  int run(VertexId s, VertexId t, int cap) {
    reset();
    int value = 0;
    while (value < cap && augment(s, t)) ++value;
    return value;
  }

  // Residual reachable set from s (call after run() found value < cap).
  VertexSet source_side(VertexId s) {
    ++epoch;
    mark[s] = epoch;
    std::vector<VertexId> stack{s};
    VertexSet side{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.out_edges(v)) {
        if (!g.edge_alive(e) || flow[e]) continue;
        VertexId w = g.head(e);
        if (mark[w] == epoch) continue;
        mark[w] = epoch;
        side.push_back(w);
        stack.push_back(w);
      }
      for (EdgeId e : g.in_edges(v)) {
        if (!g.edge_alive(e) || !flow[e]) continue;
        VertexId w = g.tail(e);
        if (mark[w] == epoch) continue;
        mark[w] = epoch;
        side.push_back(w);
        stack.push_back(w);
      }
    }
    std::sort(side.begin(), side.end());
    return side;
  }
};

EdgeCut cut_from_side(const Digraph& g, VertexSet side) {
  EdgeCut cut;
  cut.side_source = std::move(side);
  std::vector<char> in_side(g.vertex_count(), 0);
  for (VertexId v : cut.side_source) in_side[v] = 1;
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    if (in_side[g.tail(e)] && !in_side[g.head(e)]) cut.edges.push_back(e);
  }
  return cut;
}

void verify_cut(const Digraph& g, const EdgeCut& cut, int k) {
  if (cut.side_source.empty() ||
      static_cast<int>(cut.side_source.size()) == g.vertex_count()) {
    throw invariant_error("edge cut has an empty side");
  }
  if (static_cast<int>(cut.edges.size()) >= k) {
    throw invariant_error("edge cut larger than requested");
  }
  std::vector<char> in_side(g.vertex_count(), 0);
  for (VertexId v : cut.side_source) in_side[v] = 1;
  std::vector<char> is_cut(g.edge_slots(), 0);
  for (EdgeId e : cut.edges) is_cut[e] = 1;
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e) || is_cut[e]) continue;
    if (in_side[g.tail(e)] && !in_side[g.head(e)]) {
      throw invariant_error("edge cut does not separate its sides");
    }
  }
}

// Reachable set in orientation o from `start`, skipping `skip_edge` and
// `skip_vertex` (either may be -1).
void reach(const Digraph& g, VertexId start, Orientation o, EdgeId skip_edge,
           VertexId skip_vertex, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  if (start == skip_vertex) return;
  seen[start] = 1;
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    const auto& adj = o == Orientation::out ? g.out_edges(v) : g.in_edges(v);
    for (EdgeId e : adj) {
      if (!g.edge_alive(e) || e == skip_edge) continue;
      VertexId w = o == Orientation::out ? g.head(e) : g.tail(e);
      if (w == skip_vertex || seen[w]) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
}

}  // namespace

std::vector<EdgeId> strong_bridges(const Digraph& g) {
  require_strongly_connected(g, "strong_bridges");
  std::vector<char> is_bridge(g.edge_slots(), 0);
  if (g.vertex_count() > 1) {
    collect_bridges(g, 0, Orientation::out, is_bridge);
    collect_bridges(g, 0, Orientation::in, is_bridge);
  }
  std::vector<EdgeId> res;
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (is_bridge[e]) res.push_back(e);
  }
  return res;
}

std::vector<VertexId> strong_articulation_points(const Digraph& g) {
  require_strongly_connected(g, "strong_articulation_points");
  int n = g.vertex_count();
  if (n < 3) throw input_error("strong_articulation_points: need at least 3 vertices");
  std::vector<char> is_sap(n, 0);
  for (Orientation o : {Orientation::out, Orientation::in}) {
    Dominators d = dominators(g, 0, o);
    for (VertexId v = 0; v < n; ++v) {
      if (d.idom[v] > 0) is_sap[d.idom[v]] = 1;  // non-leaf, not the root
    }
  }
  {
    // The root is tested directly: is G minus vertex 0 strongly connected?
    std::vector<char> fwd(n, 0), bwd(n, 0);
    reach(g, 1, Orientation::out, -1, 0, fwd);
    reach(g, 1, Orientation::in, -1, 0, bwd);
    for (VertexId v = 1; v < n; ++v) {
      if (!fwd[v] || !bwd[v]) {
        is_sap[0] = 1;
        break;
      }
    }
  }
  std::vector<VertexId> res;
  for (VertexId v = 0; v < n; ++v) {
    if (is_sap[v]) res.push_back(v);
  }
  return res;
}

std::optional<EdgeCut> small_edge_cut(const Digraph& g, int k) {
  if (k < 2) throw input_error("small_edge_cut: k must be >= 2");
  require_strongly_connected(g, "small_edge_cut");
  int n = g.vertex_count();
  if (n < 2) return std::nullopt;

  if (k == 2) {
    std::vector<EdgeId> bridges = strong_bridges(g);
    if (bridges.empty()) return std::nullopt;
    EdgeId e = bridges.front();
    std::vector<char> seen(n, 0);
    reach(g, g.tail(e), Orientation::out, e, -1, seen);
    VertexSet side;
    for (VertexId v = 0; v < n; ++v) {
      if (seen[v]) side.push_back(v);
    }
    EdgeCut cut = cut_from_side(g, std::move(side));
    verify_cut(g, cut, k);
    return cut;
  }

  UnitFlow fwd(g);
  Digraph rg = reverse_view(g);
  UnitFlow bwd(rg);
  for (VertexId v = 1; v < n; ++v) {
    if (fwd.run(0, v, k) < k) {
      EdgeCut cut = cut_from_side(g, fwd.source_side(0));
      verify_cut(g, cut, k);
      return cut;
    }
    if (bwd.run(0, v, k) < k) {
      // A cut for flow v -> 0 in g; the reverse residual side is the sink
      // side in g, so the source side is its complement.
      VertexSet rside = bwd.source_side(0);
      std::vector<char> in_r(n, 0);
      for (VertexId w : rside) in_r[w] = 1;
      VertexSet side;
      for (VertexId w = 0; w < n; ++w) {
        if (!in_r[w]) side.push_back(w);
      }
      EdgeCut cut = cut_from_side(g, std::move(side));
      verify_cut(g, cut, k);
      return cut;
    }
  }
  return std::nullopt;
}

std::vector<EdgeId> naive_strong_bridges(const Digraph& g) {
  require_strongly_connected(g, "naive_strong_bridges");
  int n = g.vertex_count();
  std::vector<EdgeId> res;
  if (n <= 1) return res;
  std::vector<char> fwd(n, 0), bwd(n, 0);
  for (EdgeId e = 0; e < g.edge_slots(); ++e) {
    if (!g.edge_alive(e)) continue;
    reach(g, 0, Orientation::out, e, -1, fwd);
    reach(g, 0, Orientation::in, e, -1, bwd);
    for (VertexId v = 0; v < n; ++v) {
      if (!fwd[v] || !bwd[v]) {
        res.push_back(e);
        break;
      }
    }
  }
  return res;
}

std::vector<VertexId> naive_strong_articulation_points(const Digraph& g) {
  require_strongly_connected(g, "naive_strong_articulation_points");
  int n = g.vertex_count();
  if (n < 3) throw input_error("naive_strong_articulation_points: need at least 3 vertices");
  std::vector<VertexId> res;
  std::vector<char> fwd(n, 0), bwd(n, 0);
  for (VertexId x = 0; x < n; ++x) {
    VertexId start = x == 0 ? 1 : 0;
    reach(g, start, Orientation::out, -1, x, fwd);
    reach(g, start, Orientation::in, -1, x, bwd);
    for (VertexId v = 0; v < n; ++v) {
      if (v == x) continue;
      if (!fwd[v] || !bwd[v]) {
        res.push_back(x);
        break;
      }
    }
  }
  return res;
}

MinCutResult naive_min_cut(const Digraph& g, int cap) {
  require_strongly_connected(g, "naive_min_cut");
  int n = g.vertex_count();
  MinCutResult res;
  if (n < 2) {
    res.value = cap;
    res.exceeds_cap = true;
    return res;
  }

  // Independent BFS-based unit flow, kept separate from the solver-facing
  // implementation above on purpose: the two cross-check each other in tests.
  std::vector<char> flow(g.edge_slots(), 0);
  std::vector<EdgeId> pe(n, -1);
  std::vector<char> pb(n, 0);
  std::vector<char> seen(n, 0);

  auto bfs = [&](VertexId s, VertexId t) -> bool {
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<VertexId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      if (v == t) return true;
      for (EdgeId e : g.out_edges(v)) {
        if (!g.edge_alive(e) || flow[e]) continue;
        VertexId w = g.head(e);
        if (seen[w]) continue;
        seen[w] = 1;
        pe[w] = e;
        pb[w] = 0;
        q.push(w);
      }
      for (EdgeId e : g.in_edges(v)) {
        if (!g.edge_alive(e) || !flow[e]) continue;
        VertexId w = g.tail(e);
        if (seen[w]) continue;
        seen[w] = 1;
        pe[w] = e;
        pb[w] = 1;
        q.push(w);
      }
    }
    return false;
  };

  auto run_flow = [&](VertexId s, VertexId t) -> int {
    std::fill(flow.begin(), flow.end(), 0);
    int value = 0;
    while (value < cap && bfs(s, t)) {
      VertexId v = t;
      while (v != s) {
        EdgeId e = pe[v];
        if (pb[v]) {
          flow[e] = 0;
          v = g.head(e);
        } else {
          flow[e] = 1;
          v = g.tail(e);
        }
      }
      ++value;
    }
    return value;
  };

  int best = cap;
  VertexId best_v = -1;
  bool best_reverse = false;
  for (VertexId v = 1; v < n; ++v) {
    int f = run_flow(0, v);
    if (f < best) {
      best = f;
      best_v = v;
      best_reverse = false;
    }
    f = run_flow(v, 0);
    if (f < best) {
      best = f;
      best_v = v;
      best_reverse = true;
    }
  }
  res.value = best;
  res.exceeds_cap = best >= cap;
  if (!res.exceeds_cap) {
    VertexId s = best_reverse ? best_v : 0;
    VertexId t = best_reverse ? 0 : best_v;
    run_flow(s, t);
    bfs(s, t);  // final residual reachability; t is unreachable
    VertexSet side;
    for (VertexId v = 0; v < n; ++v) {
      if (seen[v]) side.push_back(v);
    }
    res.witness = cut_from_side(g, std::move(side));
    verify_cut(g, res.witness, cap);
  }
  return res;
}

}  // namespace kconn
