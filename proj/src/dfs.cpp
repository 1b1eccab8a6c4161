#include "kconn/dfs.hpp"

#include <algorithm>

namespace kconn {

void ResidualOverlay::toggle(EdgeId e) {
  if (!g_->edge_alive(e)) throw invariant_error("overlay toggle on dead edge");
  if (reversed_[e]) {
    reversed_[e] = 0;  // the extra entry goes dormant, it is not removed
    return;
  }
  reversed_[e] = 1;
  if (!has_entry_[e]) {
    has_entry_[e] = 1;
    VertexId at = orient_ == Orientation::out ? g_->head(e) : g_->tail(e);
    extra_[at].push_back(e);
    touched_edges_.push_back(e);
    touched_vertices_.push_back(at);
  }
}

void ResidualOverlay::clear() {
  for (EdgeId e : touched_edges_) {
    reversed_[e] = 0;
    has_entry_[e] = 0;
  }
  for (VertexId v : touched_vertices_) extra_[v].clear();
  touched_edges_.clear();
  touched_vertices_.clear();
}

void apply_path_reversal(ResidualOverlay& overlay, const std::vector<EdgeId>& path) {
  for (EdgeId e : path) overlay.toggle(e);
}

int DfsRun::slot_of(VertexId v) const {
  for (size_t i = 0; i < vertex.size(); ++i) {
    if (vertex[i] == v) return static_cast<int>(i);
  }
  return -1;
}

void DfsScratch::begin(int n) {
  if (static_cast<int>(slot_.size()) < n) {
    slot_.resize(n, 0);
    stamp_.resize(n, 0);
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

namespace {

struct Frame {
  int slot;
  size_t adj_i;   // cursor into the natural adjacency list
  size_t extra_i; // cursor into the overlay extra list
};

}  // namespace

DfsRun bounded_dfs(const Digraph& g, const ResidualOverlay* overlay, VertexId u,
                   int budget, Orientation orient, DfsScratch* scratch) {
  if (overlay && overlay->orientation() != orient) {
    throw invariant_error("overlay orientation mismatch");
  }
  DfsScratch local;
  DfsScratch& sc = scratch ? *scratch : local;
  sc.begin(g.vertex_count());

  DfsRun run;
  run.root = u;
  run.budget = budget;

  auto new_slot = [&](VertexId v, int parent, EdgeId via) {
    int s = static_cast<int>(run.vertex.size());
    run.vertex.push_back(v);
    run.parent_slot.push_back(parent);
    run.parent_edge.push_back(via);
    run.depth.push_back(parent < 0 ? 0 : run.depth[parent] + 1);
    run.charge.push_back(0);
    sc.assign(v, s);
    return s;
  };
  new_slot(u, -1, -1);

  std::vector<Frame> stack;
  stack.push_back({0, 0, 0});
  bool halted = false;

  while (!stack.empty() && !halted) {
    Frame& f = stack.back();
    VertexId v = run.vertex[f.slot];
    const auto& adj = orient == Orientation::out ? g.out_edges(v) : g.in_edges(v);
    const auto* extra = overlay ? &overlay->extra_at(v) : nullptr;
    bool descended = false;

    while (f.adj_i < adj.size() || (extra && f.extra_i < extra->size())) {
      EdgeId e;
      VertexId w;
      if (f.adj_i < adj.size()) {
        e = adj[f.adj_i];
        if (!g.edge_alive(e) || (overlay && overlay->is_reversed(e))) {
          ++f.adj_i;
          continue;
        }
        w = orient == Orientation::out ? g.head(e) : g.tail(e);
      } else {
        e = (*extra)[f.extra_i];
        if (!overlay->is_reversed(e) || !g.edge_alive(e)) {
          ++f.extra_i;
          continue;
        }
        w = orient == Orientation::out ? g.tail(e) : g.head(e);
      }
      if (run.edges_scanned >= budget) {
        run.stopped_early = true;
        halted = true;
        break;
      }
      if (f.adj_i < adj.size()) {
        ++f.adj_i;
      } else {
        ++f.extra_i;
      }
      ++run.edges_scanned;
      ++run.charge[f.slot];
      if (!sc.seen(w)) {
        int s = new_slot(w, f.slot, e);
        stack.push_back({s, 0, 0});
        descended = true;
        break;
      }
    }
    if (halted) break;
    if (!descended) stack.pop_back();
  }

  run.weight = run.charge;
  for (int s = static_cast<int>(run.vertex.size()) - 1; s > 0; --s) {
    run.weight[run.parent_slot[s]] += run.weight[s];
  }
  return run;
}

std::vector<int> heavy_path_slots(const DfsRun& run, int threshold) {
  int nslots = static_cast<int>(run.vertex.size());
  std::vector<int> heavy_child(nslots, -1);
  for (int s = 1; s < nslots; ++s) {
    if (run.weight[s] < threshold) continue;
    int p = run.parent_slot[s];
    if (run.weight[p] < threshold) {
      throw invariant_error("heavy vertices do not form a root path");
    }
    if (heavy_child[p] != -1) {
      throw invariant_error("heavy vertices do not form a root path");
    }
    heavy_child[p] = s;
  }
  std::vector<int> path;
  if (nslots == 0 || run.weight[0] < threshold) return path;
  for (int s = 0; s != -1; s = heavy_child[s]) path.push_back(s);
  return path;
}

std::vector<VertexId> heavy_path(const DfsRun& run, int threshold) {
  std::vector<VertexId> out;
  for (int s : heavy_path_slots(run, threshold)) out.push_back(run.vertex[s]);
  return out;
}

}  // namespace kconn
