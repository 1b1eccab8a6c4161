#include "kconn/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "kconn/cuts.hpp"
#include "kconn/local.hpp"
#include "kconn/scc.hpp"

namespace kconn {

VertexId split(Digraph& g, std::vector<VertexId>& origin, VertexId x,
               const std::vector<VertexId>& n_set) {
  long long before = g.edge_count();
  VertexId xp = g.add_vertex();
  origin.push_back(origin[x]);
  std::vector<char> in_n(g.vertex_count(), 0);
  for (VertexId v : n_set) in_n[v] = 1;
  // Snapshot the adjacency lists: move_endpoint edits them in place.
  std::vector<EdgeId> todo;
  for (EdgeId e : g.out_edges(x)) {
    if (g.edge_alive(e) && in_n[g.head(e)]) todo.push_back(e);
  }
  for (EdgeId e : g.in_edges(x)) {
    if (g.edge_alive(e) && in_n[g.tail(e)]) todo.push_back(e);
  }
  for (EdgeId e : todo) g.move_endpoint(e, x, xp);
  if (g.edge_count() != before) {
    throw invariant_error("split changed the edge count");
  }
  return xp;
}

namespace {

/// FIFO vertex queue with pending-dedup; grows if vertices are added.
class WorkList {
public:
  explicit WorkList(int n) : pending_(n, 0) {}
  void push(VertexId v) {
    if (v >= static_cast<VertexId>(pending_.size())) pending_.resize(v + 1, 0);
    if (pending_[v]) return;
    pending_[v] = 1;
    queue_.push_back(v);
  }
  bool empty() const { return head_ == queue_.size(); }
  VertexId pop() {
    VertexId v = queue_[head_++];
    pending_[v] = 0;
    return v;
  }

private:
  std::vector<VertexId> queue_;
  size_t head_ = 0;
  std::vector<char> pending_;
};

struct MarkScratch {
  std::vector<uint32_t> mark;
  uint32_t epoch = 0;
  void begin(int n) {
    if (static_cast<int>(mark.size()) < n) mark.resize(n, 0);
    if (++epoch == 0) {
      std::fill(mark.begin(), mark.end(), 0);
      epoch = 1;
    }
  }
  void set(VertexId v) { mark[v] = epoch; }
  bool has(VertexId v) const { return mark[v] == epoch; }
};

/// Live edges with exactly one endpoint in `inside`, both directions.
std::vector<EdgeId> crossing_edges(const Digraph& h, const std::vector<VertexId>& inside,
                                   MarkScratch& sc) {
  sc.begin(h.vertex_count());
  for (VertexId v : inside) sc.set(v);
  std::vector<EdgeId> res;
  for (VertexId v : inside) {
    for (EdgeId e : h.out_edges(v)) {
      if (h.edge_alive(e) && !sc.has(h.head(e))) res.push_back(e);
    }
    for (EdgeId e : h.in_edges(v)) {
      if (h.edge_alive(e) && !sc.has(h.tail(e))) res.push_back(e);
    }
  }
  return res;
}

struct SolverBase {
  SolveOptions opts;
  SolveStats* stats = nullptr;
  std::vector<VertexSet>* out = nullptr;
  long long m0 = 0;
  int delta = 1;
  double loop_guard = 0;  // keep searching while edge count exceeds this
  int depth_limit = 0;
  MarkScratch sc;

  void enter(int depth) {
    stats->recursion_depth = std::max(stats->recursion_depth, depth);
    if (depth > depth_limit) {
      throw invariant_error("recursion depth exceeds the sqrt(m0) bound");
    }
  }

  void report(int n, const std::vector<VertexId>& origin, size_t min_size) {
    VertexSet s;
    s.reserve(n);
    for (int v = 0; v < n; ++v) s.push_back(origin[v]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() >= min_size) out->push_back(std::move(s));
  }

  void report_members(const std::vector<VertexId>& members,
                      const std::vector<VertexId>& origin, size_t min_size) {
    VertexSet s;
    s.reserve(members.size());
    for (VertexId v : members) s.push_back(origin[v]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() >= min_size) out->push_back(std::move(s));
  }

  // When L drains while the graph is still large, the global step should
  // either certify the graph or split off only large-or-shrunken parts.
  // Counted, not thrown: it is a statistic the tests assert over the corpus.
  void note_child(bool l_drained, long long parent_m, long long child_m) {
    if (!l_drained || static_cast<double>(parent_m) <= loop_guard) return;
    if (static_cast<double>(child_m) > loop_guard && child_m > parent_m - delta) {
      ++stats->worklist_violations;
    }
  }
};

// ---------------------------------------------------------------------------
// 2ECS / kECS: identical skeleton, parameterized by k.
// ---------------------------------------------------------------------------

struct EdgeSolver : SolverBase {
  int k = 2;

  void solve(Digraph h, std::vector<VertexId> origin, std::vector<VertexId> seeds,
             int depth) {
    enter(depth);
    int n = h.vertex_count();
    if (n == 0) return;
    if (n == 1) {
      if (opts.include_singletons) report(1, origin, 1);
      return;
    }
    if (!small_edge_cut(h, k)) {
      report(n, origin, 2);
      return;
    }

    WorkList wl(n);
    for (VertexId v : seeds) wl.push(v);
    {
      LocalSearch ls(h);
      while (!wl.empty() && static_cast<double>(h.edge_count()) > loop_guard) {
        VertexId u = wl.pop();
        std::optional<IsolatedComponent> comp =
            k == 2 ? ls.one_edge(u, delta, Orientation::out)
                   : ls.k_edge(u, delta, k, Orientation::out);
        if (!comp) {
          comp = k == 2 ? ls.one_edge(u, delta, Orientation::in)
                        : ls.k_edge(u, delta, k, Orientation::in);
        }
        if (!comp) continue;
        for (EdgeId e : crossing_edges(h, comp->vertices, sc)) {
          wl.push(h.tail(e));
          wl.push(h.head(e));
          h.kill_edge(e);
        }
      }
      stats->searches += ls.stats().searches;
      stats->edges_scanned += ls.stats().edges_scanned;
    }
    bool l_drained = wl.empty();
    long long m_here = h.edge_count();

    auto top = strongly_connected_components(h);
    std::vector<char> touched(n, 0);
    for (EdgeId e = 0; e < static_cast<EdgeId>(h.edge_slots()); ++e) {
      if (!h.edge_alive(e)) continue;
      if (top.component_of[h.tail(e)] != top.component_of[h.head(e)]) {
        touched[h.tail(e)] = touched[h.head(e)] = 1;
      }
    }
    for (const VertexSet& ci : top.components) {
      auto sub = induced_subgraph(h, ci);
      Digraph& sg = sub.graph;
      int ns = sg.vertex_count();
      std::vector<char> tsub(ns, 0);
      for (int j = 0; j < ns; ++j) tsub[j] = touched[sub.to_parent[j]];
      if (auto cut = small_edge_cut(sg, k)) {
        for (EdgeId e : cut->edges) {
          tsub[sg.tail(e)] = tsub[sg.head(e)] = 1;
          sg.kill_edge(e);
        }
      }
      auto inner = strongly_connected_components(sg);
      for (EdgeId e = 0; e < static_cast<EdgeId>(sg.edge_slots()); ++e) {
        if (!sg.edge_alive(e)) continue;
        if (inner.component_of[sg.tail(e)] != inner.component_of[sg.head(e)]) {
          tsub[sg.tail(e)] = tsub[sg.head(e)] = 1;
        }
      }
      for (const VertexSet& cc : inner.components) {
        auto child = induced_subgraph(sg, cc);
        int nc = child.graph.vertex_count();
        std::vector<VertexId> corigin(nc);
        std::vector<VertexId> cseeds;
        for (int j = 0; j < nc; ++j) {
          VertexId in_sub = child.to_parent[j];
          corigin[j] = origin[sub.to_parent[in_sub]];
          if (tsub[in_sub]) cseeds.push_back(j);
        }
        note_child(l_drained, m_here, child.graph.edge_count());
        solve(std::move(child.graph), std::move(corigin), std::move(cseeds),
              depth + 1);
      }
    }
  }
};

// ---------------------------------------------------------------------------
// 2VCS
// ---------------------------------------------------------------------------

struct VertexSolver : SolverBase {
  long long split_budget = 0;

  VertexId do_split(Digraph& h, std::vector<VertexId>& origin,
                    std::vector<char>& is_aux, VertexId x,
                    const std::vector<VertexId>& nset) {
    VertexId xp = split(h, origin, x, nset);
    is_aux.push_back(1);
    ++stats->splits;
    if (stats->splits > split_budget) {
      throw invariant_error("more split operations than 2m-n");
    }
    return xp;
  }

  void solve(Digraph h, std::vector<VertexId> origin, std::vector<char> is_aux,
             std::vector<VertexId> seeds, int depth) {
    enter(depth);
    int n = h.vertex_count();
    {
      int aux = 0;
      for (char a : is_aux) aux += a;
      stats->aux_peak = std::max(stats->aux_peak, aux);
    }
    if (n <= 2) return;
    if (strong_articulation_points(h).empty()) {
      report(n, origin, 3);
      return;
    }

    WorkList wl(n);
    for (VertexId v : seeds) wl.push(v);
    auto ls = std::make_unique<LocalSearch>(h);
    auto flush_ls = [&] {
      stats->searches += ls->stats().searches;
      stats->edges_scanned += ls->stats().edges_scanned;
    };
    while (!wl.empty() && static_cast<double>(h.edge_count()) > loop_guard) {
      VertexId u = wl.pop();
      std::optional<IsolatedComponent> comp = ls->one_vertex(u, delta, Orientation::out);
      if (!comp) comp = ls->one_vertex(u, delta, Orientation::in);
      if (!comp) continue;

      std::vector<VertexId> inside;
      for (VertexId v : comp->vertices) {
        if (!comp->separating_vertex || v != *comp->separating_vertex) {
          inside.push_back(v);
        }
      }
      if (comp->separating_vertex) {
        VertexId x = *comp->separating_vertex;
        sc.begin(h.vertex_count());
        for (VertexId v : inside) sc.set(v);
        std::vector<VertexId> nset;
        for (EdgeId e : h.out_edges(x)) {
          if (h.edge_alive(e) && sc.has(h.head(e))) nset.push_back(h.head(e));
        }
        for (EdgeId e : h.in_edges(x)) {
          if (h.edge_alive(e) && sc.has(h.tail(e))) nset.push_back(h.tail(e));
        }
        std::sort(nset.begin(), nset.end());
        nset.erase(std::unique(nset.begin(), nset.end()), nset.end());
        flush_ls();
        ls.reset();
        VertexId xp = do_split(h, origin, is_aux, x, nset);
        inside.push_back(xp);
        // The vertex count changed; scratch arrays must be rebuilt.
        ls = std::make_unique<LocalSearch>(h);
      }
      for (EdgeId e : crossing_edges(h, inside, sc)) {
        wl.push(h.tail(e));
        wl.push(h.head(e));
        h.kill_edge(e);
      }
    }
    flush_ls();
    ls.reset();
    bool l_drained = wl.empty();
    long long m_here = h.edge_count();
    n = h.vertex_count();

    auto top = strongly_connected_components(h);
    std::vector<char> touched(n, 0);
    for (EdgeId e = 0; e < static_cast<EdgeId>(h.edge_slots()); ++e) {
      if (!h.edge_alive(e)) continue;
      if (top.component_of[h.tail(e)] != top.component_of[h.head(e)]) {
        touched[h.tail(e)] = touched[h.head(e)] = 1;
      }
    }
    for (const VertexSet& ci : top.components) {
      if (ci.size() < 3) continue;
      auto sub = induced_subgraph(h, ci);
      Digraph& sg = sub.graph;
      int ns = sg.vertex_count();
      std::vector<VertexId> origin_sub(ns);
      std::vector<char> aux_sub(ns);
      std::vector<char> tsub(ns, 0);
      for (int j = 0; j < ns; ++j) {
        origin_sub[j] = origin[sub.to_parent[j]];
        aux_sub[j] = is_aux[sub.to_parent[j]];
        tsub[j] = touched[sub.to_parent[j]];
      }

      auto saps = strong_articulation_points(sg);
      if (saps.empty()) {
        report(ns, origin_sub, 3);
        continue;
      }
      VertexId v = *std::min_element(saps.begin(), saps.end());

      // C': a sink component of the condensation of sg minus v (lowest
      // original id among sinks, for determinism). A sink component's only
      // edges to the rest of sg run through v, so once they move to the
      // split copy no strongly connected component can straddle C' and the
      // rest -- every child is strictly smaller than sg.
      std::vector<VertexId> rest;
      for (VertexId j = 0; j < ns; ++j) {
        if (j != v) rest.push_back(j);
      }
      auto minus = induced_subgraph(sg, rest);
      auto msccs = strongly_connected_components(minus.graph);
      std::vector<char> is_sink(msccs.components.size(), 1);
      for (EdgeId e = 0; e < static_cast<EdgeId>(minus.graph.edge_slots()); ++e) {
        if (!minus.graph.edge_alive(e)) continue;
        int ct = msccs.component_of[minus.graph.tail(e)];
        int ch = msccs.component_of[minus.graph.head(e)];
        if (ct != ch) is_sink[ct] = 0;
      }
      const VertexSet* best = nullptr;
      VertexId best_key = 0;
      for (size_t ci2 = 0; ci2 < msccs.components.size(); ++ci2) {
        if (!is_sink[ci2]) continue;
        const VertexSet& mc = msccs.components[ci2];
        VertexId key = origin_sub[minus.to_parent[mc[0]]];
        for (VertexId w : mc) key = std::min(key, origin_sub[minus.to_parent[w]]);
        if (!best || key < best_key) {
          best = &mc;
          best_key = key;
        }
      }
      if (!best) throw invariant_error("condensation has no sink component");
      sc.begin(ns);
      for (VertexId w : *best) sc.set(minus.to_parent[w]);
      std::vector<VertexId> nset;
      for (EdgeId e : sg.out_edges(v)) {
        if (sg.edge_alive(e) && sc.has(sg.head(e))) nset.push_back(sg.head(e));
      }
      for (EdgeId e : sg.in_edges(v)) {
        if (sg.edge_alive(e) && sc.has(sg.tail(e))) nset.push_back(sg.tail(e));
      }
      std::sort(nset.begin(), nset.end());
      nset.erase(std::unique(nset.begin(), nset.end()), nset.end());
      do_split(sg, origin_sub, aux_sub, v, nset);

      auto inner = strongly_connected_components(sg);
      tsub.resize(sg.vertex_count(), 0);
      for (EdgeId e = 0; e < static_cast<EdgeId>(sg.edge_slots()); ++e) {
        if (!sg.edge_alive(e)) continue;
        if (inner.component_of[sg.tail(e)] != inner.component_of[sg.head(e)]) {
          tsub[sg.tail(e)] = tsub[sg.head(e)] = 1;
        }
      }
      for (const VertexSet& cc : inner.components) {
        auto child = induced_subgraph(sg, cc);
        int nc = child.graph.vertex_count();
        std::vector<VertexId> corigin(nc);
        std::vector<char> caux(nc);
        std::vector<VertexId> cseeds;
        for (int j = 0; j < nc; ++j) {
          VertexId in_sub = child.to_parent[j];
          corigin[j] = origin_sub[in_sub];
          caux[j] = aux_sub[in_sub];
          if (tsub[in_sub]) cseeds.push_back(j);
        }
        note_child(l_drained, m_here, child.graph.edge_count());
        solve(std::move(child.graph), std::move(corigin), std::move(caux),
              std::move(cseeds), depth + 1);
      }
    }
  }
};

void finish(ComponentReport& rep) {
  std::sort(rep.components.begin(), rep.components.end());
  rep.components.erase(std::unique(rep.components.begin(), rep.components.end()),
                       rep.components.end());
}

int pick_delta(long long m0, const SolveOptions& opts) {
  if (opts.delta_override > 0) return opts.delta_override;
  return std::max(1, static_cast<int>(std::sqrt(static_cast<double>(m0))));
}

int pick_depth_limit(long long m0, int mult) {
  double root = std::sqrt(static_cast<double>(std::max<long long>(m0, 1)));
  return static_cast<int>(4.0 * mult * root) + 2;
}

std::vector<VertexId> all_vertices(int n) {
  std::vector<VertexId> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

ComponentReport max_kecs(const Digraph& g, int k, const SolveOptions& opts) {
  if (k < 2) throw input_error("max_kecs: k must be >= 2");
  ComponentReport rep;
  rep.mode = k == 2 ? "2ecs" : "kecs";
  rep.stats.m0 = g.edge_count();
  rep.stats.delta = pick_delta(rep.stats.m0, opts);

  EdgeSolver s;
  s.k = k;
  s.opts = opts;
  s.stats = &rep.stats;
  s.out = &rep.components;
  s.m0 = rep.stats.m0;
  s.delta = rep.stats.delta;
  s.loop_guard = 2.0 * (k == 2 ? 1 : k) * std::sqrt(static_cast<double>(s.m0));
  s.depth_limit = pick_depth_limit(s.m0, k == 2 ? 1 : k);

  auto top = strongly_connected_components(g);
  for (const VertexSet& comp : top.components) {
    if (comp.size() == 1 && !opts.include_singletons) continue;
    auto sub = induced_subgraph(g, comp);
    std::vector<VertexId> origin = sub.to_parent;
    s.solve(std::move(sub.graph), std::move(origin),
            all_vertices(static_cast<int>(comp.size())), 1);
  }
  finish(rep);
  return rep;
}

ComponentReport max_2ecs(const Digraph& g, const SolveOptions& opts) {
  return max_kecs(g, 2, opts);
}

ComponentReport max_2vcs(const Digraph& g, const SolveOptions& opts) {
  ComponentReport rep;
  rep.mode = "2vcs";
  rep.stats.m0 = g.edge_count();
  rep.stats.delta = pick_delta(rep.stats.m0, opts);

  VertexSolver s;
  s.opts = opts;
  s.stats = &rep.stats;
  s.out = &rep.components;
  s.m0 = rep.stats.m0;
  s.delta = rep.stats.delta;
  s.loop_guard = 2.0 * std::sqrt(static_cast<double>(s.m0));
  s.depth_limit = pick_depth_limit(s.m0, 1);
  s.split_budget = std::max<long long>(0, 2 * rep.stats.m0 - g.vertex_count());

  auto top = strongly_connected_components(g);
  for (const VertexSet& comp : top.components) {
    if (comp.size() < 3) continue;
    auto sub = induced_subgraph(g, comp);
    int ns = sub.graph.vertex_count();
    std::vector<VertexId> origin = sub.to_parent;
    s.solve(std::move(sub.graph), std::move(origin), std::vector<char>(ns, 0),
            all_vertices(ns), 1);
  }
  finish(rep);
  return rep;
}

ComponentReport max_kecs_undirected(int n,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges,
                                    int k, const SolveOptions& opts) {
  std::vector<std::pair<VertexId, VertexId>> dir;
  dir.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    dir.emplace_back(a, b);
    dir.emplace_back(b, a);
  }
  Digraph g = from_edge_list(n, dir);
  SolveOptions o = opts;
  if (o.delta_override <= 0 && g.edge_count() > 0) {
    o.delta_override = static_cast<int>(
        std::ceil(static_cast<double>(g.edge_count()) / std::sqrt(static_cast<double>(n))));
  }
  ComponentReport rep = max_kecs(g, k, o);
  rep.mode = "kecs-undirected";
  return rep;
}

}  // namespace kconn
