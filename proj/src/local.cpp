#include "kconn/local.hpp"

#include <algorithm>

namespace kconn {

namespace {

// Resumable DFS used by the k-edge search: the traversal is extended in
// chunks and survives nested recursive searches that temporarily flip edges
// in the shared overlay.
struct IncDfs {
  const Digraph& g;
  const ResidualOverlay& ov;
  Orientation o;
  DfsScratch& sc;

  std::vector<VertexId> vertex;
  std::vector<int> parent_slot;
  std::vector<EdgeId> parent_edge;
  std::vector<int> depth;

  struct Frame {
    int slot;
    size_t adj_i;
    size_t extra_i;
  };
  std::vector<Frame> stack;

  IncDfs(const Digraph& graph, const ResidualOverlay& overlay, Orientation orient,
         VertexId u, DfsScratch& scratch)
      : g(graph), ov(overlay), o(orient), sc(scratch) {
    sc.begin(g.vertex_count());
    new_slot(u, -1, -1);
    stack.push_back({0, 0, 0});
  }

  int new_slot(VertexId v, int parent, EdgeId via) {
    int s = static_cast<int>(vertex.size());
    vertex.push_back(v);
    parent_slot.push_back(parent);
    parent_edge.push_back(via);
    depth.push_back(parent < 0 ? 0 : depth[parent] + 1);
    sc.assign(v, s);
    return s;
  }

  // Scan up to `budget` more edges. Returns the number scanned; h_slot_out
  // receives the slot of the shallowest vertex that was current during this
  // chunk (the NCA of everything visited in it).
  int extend(int budget, int& h_slot_out) {
    int added = 0;
    int h_slot = stack.empty() ? 0 : stack.back().slot;
    while (!stack.empty() && added < budget) {
      Frame& f = stack.back();
      VertexId v = vertex[f.slot];
      const auto& adj = o == Orientation::out ? g.out_edges(v) : g.in_edges(v);
      const auto& extra = ov.extra_at(v);
      bool descended = false;
      bool out_of_budget = false;
      while (f.adj_i < adj.size() || f.extra_i < extra.size()) {
        EdgeId e;
        VertexId w;
        bool natural = f.adj_i < adj.size();
        if (natural) {
          e = adj[f.adj_i];
          if (!g.edge_alive(e) || ov.is_reversed(e)) {
            ++f.adj_i;
            continue;
          }
          w = o == Orientation::out ? g.head(e) : g.tail(e);
        } else {
          e = extra[f.extra_i];
          if (!ov.is_reversed(e) || !g.edge_alive(e)) {
            ++f.extra_i;
            continue;
          }
          w = o == Orientation::out ? g.tail(e) : g.head(e);
        }
        if (added == budget) {
          out_of_budget = true;
          break;
        }
        if (natural) {
          ++f.adj_i;
        } else {
          ++f.extra_i;
        }
        ++added;
        if (!sc.seen(w)) {
          int s = new_slot(w, f.slot, e);
          stack.push_back({s, 0, 0});
          descended = true;
          break;
        }
      }
      if (out_of_budget) break;
      if (descended) continue;
      stack.pop_back();
      if (!stack.empty() && depth[stack.back().slot] < depth[h_slot]) {
        h_slot = stack.back().slot;
      }
    }
    h_slot_out = h_slot;
    return added;
  }
};

}  // namespace

struct LocalSearch::Impl {
  const Digraph& g;
  SearchStats& stats;
  DfsScratch f1_scratch;
  std::optional<ResidualOverlay> ov_out, ov_in;
  std::vector<std::unique_ptr<DfsScratch>> level_scratch;

  // Stamped membership / reached / visited marks.
  std::vector<uint32_t> mark, reached, visited;
  std::vector<int> pos_value;  // sparse path positions, guarded by mark
  uint32_t epoch = 0;

  Impl(const Digraph& graph, SearchStats& st)
      : g(graph),
        stats(st),
        mark(graph.vertex_count(), 0),
        reached(graph.vertex_count(), 0),
        visited(graph.vertex_count(), 0),
        pos_value(graph.vertex_count(), 0) {}

  ResidualOverlay& overlay(Orientation o) {
    auto& slot = o == Orientation::out ? ov_out : ov_in;
    if (!slot) slot.emplace(g, o);
    return *slot;
  }

  // Crossing edges of `comp` in orientation o, read off the original graph.
  std::vector<EdgeId> crossing(const VertexSet& comp, Orientation o) {
    ++epoch;
    for (VertexId v : comp) mark[v] = epoch;
    std::vector<EdgeId> res;
    for (VertexId v : comp) {
      const auto& adj = o == Orientation::out ? g.out_edges(v) : g.in_edges(v);
      for (EdgeId e : adj) {
        if (!g.edge_alive(e)) continue;
        VertexId w = o == Orientation::out ? g.head(e) : g.tail(e);
        if (mark[w] != epoch) res.push_back(e);
      }
    }
    std::sort(res.begin(), res.end());
    return res;
  }

  IsolatedComponent make_component(VertexSet vertices, Orientation o,
                                   std::optional<VertexId> sep, int max_boundary) {
    IsolatedComponent comp;
    std::sort(vertices.begin(), vertices.end());
    comp.vertices = std::move(vertices);
    comp.boundary = crossing(comp.vertices, o);
    comp.separating_vertex = sep;
    comp.orientation = o;
    if (static_cast<int>(comp.boundary.size()) > max_boundary) {
      throw invariant_error("isolated component has too many boundary edges");
    }
    if (sep) {
      for (EdgeId e : comp.boundary) {
        VertexId src = o == Orientation::out ? g.tail(e) : g.head(e);
        if (src != *sep) {
          throw invariant_error("boundary edge does not depart from the separating vertex");
        }
      }
      // With no edges leaving the set there is nothing to separate; the set
      // stands on its own and reporting a separating vertex would make the
      // caller split off an identical copy of the graph.
      if (comp.boundary.empty()) comp.separating_vertex.reset();
    }
    return comp;
  }

  // One level of the chunked k-edge search. Returns the visited set of a
  // completed bounded DFS, or an empty set if no small component was found.
  VertexSet ke_level(ResidualOverlay& ov, Orientation o, VertexId u, int delta,
                     int kprime, int level) {
    IncDfs f(g, ov, o, u, *level_scratch[level]);
    for (int chunk = 0; chunk < 2 * kprime + 1; ++chunk) {
      int h_slot = 0;
      int added = f.extend(delta + 1, h_slot);
      stats.edges_scanned += added;
      if (added <= delta) {
        return f.vertex;
      }
      if (level <= kprime) {
        std::vector<EdgeId> path;
        for (int s = h_slot; s > 0; s = f.parent_slot[s]) {
          path.push_back(f.parent_edge[s]);
        }
        apply_path_reversal(ov, path);
        VertexSet s = ke_level(ov, o, u, delta, kprime, level + 1);
        apply_path_reversal(ov, path);
        if (!s.empty()) return s;
      }
    }
    return {};
  }
};

LocalSearch::LocalSearch(const Digraph& g)
    : g_(&g), impl_(std::make_unique<Impl>(g, stats_)) {}

LocalSearch::~LocalSearch() = default;

std::optional<IsolatedComponent> LocalSearch::one_edge(VertexId u, int delta,
                                                       Orientation o) {
  if (delta < 1) throw input_error("one_edge: delta must be >= 1");
  ++stats_.searches;
  const Digraph& g = *g_;

  DfsRun f1 = bounded_dfs(g, nullptr, u, 2 * delta + 1, o, &impl_->f1_scratch);
  stats_.edges_scanned += f1.edges_scanned;
  if (f1.edges_scanned < 2 * delta + 1) {
    // The whole reachable subgraph is a 0-edge-out component.
    return impl_->make_component(f1.vertex, o, std::nullopt, 0);
  }

  std::vector<int> path = heavy_path_slots(f1, delta);
  ResidualOverlay& ov = impl_->overlay(o);
  for (int s : path) {
    if (s != 0) ov.toggle(f1.parent_edge[s]);
  }
  DfsRun f2 = bounded_dfs(g, &ov, u, delta + 1, o, &impl_->f1_scratch);
  stats_.edges_scanned += f2.edges_scanned;
  ov.clear();

  if (f2.edges_scanned > delta) return std::nullopt;
  return impl_->make_component(f2.vertex, o, std::nullopt, 1);
}

std::optional<IsolatedComponent> LocalSearch::one_vertex(VertexId u, int delta,
                                                         Orientation o) {
  if (delta < 1) throw input_error("one_vertex: delta must be >= 1");
  ++stats_.searches;
  const Digraph& g = *g_;
  Impl& im = *impl_;

  DfsRun f1 = bounded_dfs(g, nullptr, u, 2 * delta + 1, o, &im.f1_scratch);
  stats_.edges_scanned += f1.edges_scanned;
  if (f1.edges_scanned < 2 * delta + 1) {
    return im.make_component(f1.vertex, o, std::nullopt, 0);
  }

  // Blocked vertices: the heavy path of F1 at threshold delta+1. The start
  // vertex u itself is exempt; F2 may always visit it.
  std::vector<int> slots = heavy_path_slots(f1, delta + 1);
  std::vector<VertexId> path;
  for (int s : slots) path.push_back(f1.vertex[s]);
  std::vector<char> blocked(path.size(), 1);
  blocked[0] = 0;  // u

  ++im.epoch;
  uint32_t ep = im.epoch;
  auto& pathpos = im.mark;  // reuse: pathpos[v] valid iff stamped this epoch
  for (size_t i = 0; i < path.size(); ++i) {
    pathpos[path[i]] = ep;
    im.pos_value[path[i]] = static_cast<int>(i);
  }

  auto reached_now = [&](VertexId v) { return im.reached[v] == ep; };
  auto visited_now = [&](VertexId v) { return im.visited[v] == ep; };

  std::vector<VertexId> reached_list{u};
  im.reached[u] = ep;
  im.visited[u] = ep;

  struct Frame {
    VertexId v;
    size_t i;
  };
  std::vector<Frame> stack{{u, 0}};
  int scanned = 0;
  bool fail = false;

  while (!stack.empty() && !fail) {
    Frame& f = stack.back();
    const auto& adj = o == Orientation::out ? g.out_edges(f.v) : g.in_edges(f.v);
    bool descended = false;
    while (f.i < adj.size()) {
      EdgeId e = adj[f.i];
      if (!g.edge_alive(e)) {
        ++f.i;
        continue;
      }
      if (scanned == delta) {
        // The next traversal would be the (delta+1)-st edge.
        fail = true;
        break;
      }
      ++f.i;
      ++scanned;
      VertexId w = o == Orientation::out ? g.head(e) : g.tail(e);
      if (!reached_now(w)) {
        im.reached[w] = ep;
        reached_list.push_back(w);
      }
      if (pathpos[w] == ep && blocked[im.pos_value[w]]) {
        // Reached a blocked vertex: unblock everything strictly above it and
        // visit any of those that were already reached.
        int p = im.pos_value[w];
        for (int j = 1; j < p; ++j) {
          if (!blocked[j]) continue;
          blocked[j] = 0;
          VertexId y = path[j];
          if (reached_now(y) && !visited_now(y)) {
            im.visited[y] = ep;
            stack.push_back({y, 0});
            descended = true;
          }
        }
        if (descended) break;
      } else if (!visited_now(w)) {
        im.visited[w] = ep;
        stack.push_back({w, 0});
        descended = true;
        break;
      }
    }
    if (fail) break;
    if (!descended) stack.pop_back();
  }

  stats_.edges_scanned += scanned;
  if (fail) return std::nullopt;

  std::optional<VertexId> sep;
  for (size_t j = 0; j < path.size(); ++j) {
    if (blocked[j] && reached_now(path[j])) {
      if (sep) throw invariant_error("more than one blocked vertex was reached");
      sep = path[j];
    }
  }
  return im.make_component(reached_list, o, sep,
                           sep ? static_cast<int>(g.edge_slots()) : 0);
}

std::optional<IsolatedComponent> LocalSearch::k_edge(VertexId u, int delta, int k,
                                                     Orientation o) {
  if (k < 2) throw input_error("k_edge: k must be >= 2");
  if (delta < 1) throw input_error("k_edge: delta must be >= 1");
  ++stats_.searches;
  Impl& im = *impl_;
  int kprime = k - 1;
  while (static_cast<int>(im.level_scratch.size()) < kprime + 2) {
    im.level_scratch.push_back(std::make_unique<DfsScratch>());
  }
  ResidualOverlay& ov = im.overlay(o);
  ov.clear();
  VertexSet s = im.ke_level(ov, o, u, delta, kprime, 1);
  ov.clear();
  if (s.empty()) return std::nullopt;
  return im.make_component(std::move(s), o, std::nullopt, k - 1);
}

std::optional<IsolatedComponent> one_edge_out(const Digraph& g, VertexId u, int delta) {
  return LocalSearch(g).one_edge(u, delta, Orientation::out);
}
std::optional<IsolatedComponent> one_edge_in(const Digraph& g, VertexId u, int delta) {
  return LocalSearch(g).one_edge(u, delta, Orientation::in);
}
std::optional<IsolatedComponent> one_vertex_out(const Digraph& g, VertexId u, int delta) {
  return LocalSearch(g).one_vertex(u, delta, Orientation::out);
}
std::optional<IsolatedComponent> one_vertex_in(const Digraph& g, VertexId u, int delta) {
  return LocalSearch(g).one_vertex(u, delta, Orientation::in);
}
std::optional<IsolatedComponent> k_edge_out(const Digraph& g, VertexId u, int delta, int k) {
  return LocalSearch(g).k_edge(u, delta, k, Orientation::out);
}
std::optional<IsolatedComponent> k_edge_in(const Digraph& g, VertexId u, int delta, int k) {
  return LocalSearch(g).k_edge(u, delta, k, Orientation::in);
}

}  // namespace kconn
