#include "kconn/oracles.hpp"

#include <algorithm>
#include <bit>

#include "kconn/cuts.hpp"
#include "kconn/scc.hpp"

namespace kconn {

namespace {

/// BFS from vertex 0 with edge `skip` removed; true iff every vertex is
/// reached. Every edge examined bumps *scans.
bool covers_all_skipping(const Digraph& g, Orientation o, EdgeId skip,
                         long long* scans) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue{0};
  seen[0] = 1;
  int reached = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    const auto& adj = o == Orientation::out ? g.out_edges(v) : g.in_edges(v);
    for (EdgeId e : adj) {
      ++*scans;
      if (!g.edge_alive(e) || e == skip) continue;
      VertexId w = o == Orientation::out ? g.head(e) : g.tail(e);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == n;
}

/// First edge (in id order) of the strongly connected graph h whose deletion
/// breaks strong connectivity, or -1.
EdgeId first_bridge_by_deletion(const Digraph& h, long long* scans) {
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.edge_slots()); ++e) {
    if (!h.edge_alive(e)) continue;
    if (!covers_all_skipping(h, Orientation::out, e, scans) ||
        !covers_all_skipping(h, Orientation::in, e, scans)) {
      return e;
    }
  }
  return -1;
}

struct Piece {
  Digraph h;
  std::vector<VertexId> origin;
};

void push_scc_pieces(const Digraph& h, const std::vector<VertexId>& origin,
                     size_t min_size, std::vector<Piece>& stack) {
  auto sccs = strongly_connected_components(h);
  for (const VertexSet& c : sccs.components) {
    if (c.size() < min_size) continue;
    auto sub = induced_subgraph(h, c);
    std::vector<VertexId> o(sub.graph.vertex_count());
    for (int j = 0; j < sub.graph.vertex_count(); ++j) o[j] = origin[sub.to_parent[j]];
    stack.push_back({std::move(sub.graph), std::move(o)});
  }
}

VertexSet origin_set(const Piece& p) {
  VertexSet s = p.origin;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<VertexId> identity_ids(int n) {
  std::vector<VertexId> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

void finish(OracleReport& rep) {
  std::sort(rep.components.begin(), rep.components.end());
  rep.components.erase(
      std::unique(rep.components.begin(), rep.components.end()),
      rep.components.end());
}

}  // namespace

OracleReport baseline_2ecs(const Digraph& g) {
  OracleReport rep;
  rep.mode = "2ecs";
  std::vector<Piece> stack;
  push_scc_pieces(g, identity_ids(g.vertex_count()), 2, stack);
  while (!stack.empty()) {
    Piece p = std::move(stack.back());
    stack.pop_back();
    EdgeId b = first_bridge_by_deletion(p.h, &rep.edge_scans);
    if (b < 0) {
      rep.components.push_back(origin_set(p));
      continue;
    }
    p.h.kill_edge(b);
    push_scc_pieces(p.h, p.origin, 2, stack);
  }
  finish(rep);
  return rep;
}

OracleReport baseline_2vcs(const Digraph& g) {
  OracleReport rep;
  rep.mode = "2vcs";
  std::vector<Piece> stack;
  push_scc_pieces(g, identity_ids(g.vertex_count()), 3, stack);
  while (!stack.empty()) {
    Piece p = std::move(stack.back());
    stack.pop_back();
    int n = p.h.vertex_count();
    if (n < 3) continue;

    // Lowest-id vertex whose removal disconnects the rest.
    VertexId sap = -1;
    for (VertexId x = 0; x < n && sap < 0; ++x) {
      VertexSet rest;
      for (VertexId v = 0; v < n; ++v) {
        if (v != x) rest.push_back(v);
      }
      auto minus = induced_subgraph(p.h, rest);
      rep.edge_scans += minus.graph.edge_count();
      if (strongly_connected_components(minus.graph).components.size() > 1) sap = x;
    }
    if (sap < 0) {
      rep.components.push_back(origin_set(p));
      continue;
    }

    VertexSet rest;
    for (VertexId v = 0; v < n; ++v) {
      if (v != sap) rest.push_back(v);
    }
    auto minus = induced_subgraph(p.h, rest);
    auto dsccs = strongly_connected_components(minus.graph);
    for (const VertexSet& d : dsccs.components) {
      VertexSet members{sap};
      for (VertexId w : d) members.push_back(minus.to_parent[w]);
      std::sort(members.begin(), members.end());
      auto child = induced_subgraph(p.h, members);
      std::vector<VertexId> o(child.graph.vertex_count());
      for (int j = 0; j < child.graph.vertex_count(); ++j) {
        o[j] = p.origin[child.to_parent[j]];
      }
      push_scc_pieces(child.graph, o, 3, stack);
    }
  }
  finish(rep);
  // Drop sets strictly contained in another (only maximal subgraphs count).
  std::vector<VertexSet> keep;
  for (size_t i = 0; i < rep.components.size(); ++i) {
    bool subset = false;
    for (size_t j = 0; j < rep.components.size() && !subset; ++j) {
      if (i == j || rep.components[i].size() >= rep.components[j].size()) continue;
      subset = std::includes(rep.components[j].begin(), rep.components[j].end(),
                             rep.components[i].begin(), rep.components[i].end());
    }
    if (!subset) keep.push_back(rep.components[i]);
  }
  rep.components = std::move(keep);
  return rep;
}

OracleReport baseline_kecs(const Digraph& g, int k) {
  if (k < 2) throw input_error("baseline_kecs: k must be >= 2");
  OracleReport rep;
  rep.mode = k == 2 ? "2ecs" : "kecs";
  std::vector<Piece> stack;
  push_scc_pieces(g, identity_ids(g.vertex_count()), 2, stack);
  while (!stack.empty()) {
    Piece p = std::move(stack.back());
    stack.pop_back();
    MinCutResult r = naive_min_cut(p.h, k);
    if (r.exceeds_cap) {
      rep.components.push_back(origin_set(p));
      continue;
    }
    for (EdgeId e : r.witness.edges) p.h.kill_edge(e);
    push_scc_pieces(p.h, p.origin, 2, stack);
  }
  finish(rep);
  return rep;
}

namespace {

int bfs_unit_flow(const Digraph& g, VertexId s, VertexId t, int cap) {
  std::vector<char> flow(g.edge_slots(), 0);
  std::vector<EdgeId> via_edge(g.vertex_count());
  std::vector<char> via_fwd(g.vertex_count());
  std::vector<char> seen(g.vertex_count());
  int total = 0;
  while (total < cap) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<VertexId> queue{s};
    seen[s] = 1;
    bool found = false;
    for (size_t qi = 0; qi < queue.size() && !found; ++qi) {
      VertexId v = queue[qi];
      for (EdgeId e : g.out_edges(v)) {
        if (!g.edge_alive(e) || flow[e]) continue;
        VertexId w = g.head(e);
        if (seen[w]) continue;
        seen[w] = 1;
        via_edge[w] = e;
        via_fwd[w] = 1;
        if (w == t) {
          found = true;
          break;
        }
        queue.push_back(w);
      }
      if (found) break;
      for (EdgeId e : g.in_edges(v)) {
        if (!g.edge_alive(e) || !flow[e]) continue;
        VertexId w = g.tail(e);
        if (seen[w]) continue;
        seen[w] = 1;
        via_edge[w] = e;
        via_fwd[w] = 0;
        if (w == t) {
          found = true;
          break;
        }
        queue.push_back(w);
      }
    }
    if (!found) break;
    for (VertexId v = t; v != s;) {
      EdgeId e = via_edge[v];
      if (via_fwd[v]) {
        flow[e] = 1;
        v = g.tail(e);
      } else {
        flow[e] = 0;
        v = g.head(e);
      }
    }
    ++total;
  }
  return total;
}

}  // namespace

int pairwise_edge_connectivity(const Digraph& g, VertexId u, VertexId v, int cap) {
  if (u == v) throw input_error("pairwise_edge_connectivity: u == v");
  int fwd = bfs_unit_flow(g, u, v, cap);
  if (fwd == 0) return 0;
  int bwd = bfs_unit_flow(g, v, u, fwd);
  return std::min(fwd, bwd);
}

std::vector<VertexSet> enumerate_isolated_components(const Digraph& g, VertexId u,
                                                     int k, ComponentKind kind) {
  int n = g.vertex_count();
  if (n > 20) throw input_error("enumerate_isolated_components: n > 20");
  if (u < 0 || u >= n) throw input_error("enumerate_isolated_components: bad u");
  if (k < 1) throw input_error("enumerate_isolated_components: k < 1");

  bool flip = kind == ComponentKind::edge_in || kind == ComponentKind::vertex_in;
  bool vertex_case =
      kind == ComponentKind::vertex_out || kind == ComponentKind::vertex_in;
  std::vector<std::pair<int, int>> es;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_slots()); ++e) {
    if (!g.edge_alive(e)) continue;
    int t = g.tail(e), h = g.head(e);
    es.emplace_back(flip ? h : t, flip ? t : h);
  }

  uint32_t total = 1u << n;
  uint32_t ubit = 1u << u;
  std::vector<char> qual(total, 0);
  for (uint32_t mask = 0; mask < total; ++mask) {
    if (!(mask & ubit)) continue;
    bool ok;
    if (vertex_case) {
      bool u_leaves = false;
      uint32_t leavers = 0;
      for (const auto& [t, h] : es) {
        if ((mask >> t & 1u) && !(mask >> h & 1u)) {
          if (t == u) {
            u_leaves = true;
            break;
          }
          leavers |= 1u << t;
        }
      }
      ok = !u_leaves && std::popcount(leavers) <= k - 1;
    } else {
      int b = 0;
      for (const auto& [t, h] : es) {
        if ((mask >> t & 1u) && !(mask >> h & 1u)) ++b;
      }
      ok = b <= k - 1;
    }
    qual[mask] = ok;
  }

  // has_sub[mask]: some qualifying set containing u is a subset of mask.
  std::vector<char> has_sub(total, 0);
  for (uint32_t mask = 0; mask < total; ++mask) {
    if (!(mask & ubit)) continue;
    if (qual[mask]) {
      has_sub[mask] = 1;
      continue;
    }
    for (int b = 0; b < n; ++b) {
      if (b == u || !(mask >> b & 1u)) continue;
      if (has_sub[mask & ~(1u << b)]) {
        has_sub[mask] = 1;
        break;
      }
    }
  }

  std::vector<VertexSet> out;
  for (uint32_t mask = 0; mask < total; ++mask) {
    if (!(mask & ubit) || !qual[mask]) continue;
    bool minimal = true;
    for (int b = 0; b < n && minimal; ++b) {
      if (b == u || !(mask >> b & 1u)) continue;
      if (has_sub[mask & ~(1u << b)]) minimal = false;
    }
    if (!minimal) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) s.push_back(v);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Digraph shrink_counterexample(const Digraph& g,
                              const std::function<bool(const Digraph&)>& still_fails) {
  int n = g.vertex_count();
  std::vector<std::pair<VertexId, VertexId>> es;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_slots()); ++e) {
    if (g.edge_alive(e)) es.emplace_back(g.tail(e), g.head(e));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < es.size();) {
      auto saved = es[i];
      es.erase(es.begin() + static_cast<long>(i));
      if (still_fails(from_edge_list(n, es))) {
        changed = true;
      } else {
        es.insert(es.begin() + static_cast<long>(i), saved);
        ++i;
      }
    }
    for (VertexId v = n - 1; v >= 0; --v) {
      std::vector<std::pair<VertexId, VertexId>> es2;
      for (const auto& [a, b] : es) {
        if (a == v || b == v) continue;
        es2.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
      }
      if (still_fails(from_edge_list(n - 1, es2))) {
        es = std::move(es2);
        --n;
        changed = true;
      }
    }
  }
  return from_edge_list(n, es);
}

}  // namespace kconn
