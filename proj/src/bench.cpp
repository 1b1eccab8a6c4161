#include "kconn/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "kconn/gen.hpp"
#include "kconn/oracles.hpp"
#include "kconn/solvers.hpp"

namespace kconn {

int harness_thread_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("KCONN_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

namespace {

Digraph build_graph(const std::string& family, long long size, int k, uint64_t seed) {
  if (family == "cycle-chain") {
    int len = 10;
    int cycles = std::max(2, static_cast<int>((size + 2) / (len + 2)));
    return gen_cycle_chain(cycles, len);
  }
  if (family == "random-digraph") {
    int n = std::max(4, static_cast<int>(size / 3));
    return gen_random_digraph(n, size, seed);
  }
  if (family == "planted-cliques") {
    int csize = 8;
    int bridges = std::max(1, k - 1);
    long long per = static_cast<long long>(csize) * (csize - 1);  // bidirected clique
    int cliques = std::max(2, static_cast<int>(size / (per + 2 * bridges)));
    return gen_planted_cliques(cliques, csize, bridges);
  }
  if (family == "bidirected") {
    int n = std::max(4, static_cast<int>(size / 4));
    return gen_bidirected(n, size / 2, seed);
  }
  throw input_error("unknown generator family: " + family);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BenchOutcome run_benchmark(const BenchSpec& spec) {
  struct Cell {
    std::string family;
    long long size;
  };
  std::vector<Cell> cells;
  for (const auto& f : spec.families) {
    for (long long s : spec.sizes) cells.push_back({f, s});
  }

  BenchOutcome out;
  std::mutex mu;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      Digraph g = build_graph(cell.family, cell.size, spec.k, spec.seed);

      auto t0 = std::chrono::steady_clock::now();
      ComponentReport fast;
      if (spec.mode == "2vcs") {
        fast = max_2vcs(g);
      } else if (spec.mode == "kecs") {
        fast = max_kecs(g, spec.k);
      } else {
        fast = max_2ecs(g);
      }
      double fast_wall = seconds_since(t0);

      BenchRecord fr{cell.family, g.vertex_count(), g.edge_count(), spec.k,
                     spec.mode,   "fast",           fast_wall,      fast.stats.edges_scanned,
                     fast.stats.recursion_depth,    static_cast<int>(fast.components.size())};

      BenchRecord br;
      bool have_baseline = false;
      OracleReport base;
      if (spec.run_baseline) {
        t0 = std::chrono::steady_clock::now();
        if (spec.mode == "2vcs") {
          base = baseline_2vcs(g);
        } else if (spec.mode == "kecs") {
          base = baseline_kecs(g, spec.k);
        } else {
          base = baseline_2ecs(g);
        }
        double base_wall = seconds_since(t0);
        br = BenchRecord{cell.family, g.vertex_count(), g.edge_count(), spec.k,
                         spec.mode,   "baseline",       base_wall,      base.edge_scans,
                         0,           static_cast<int>(base.components.size())};
        have_baseline = true;
      }

      std::lock_guard<std::mutex> lock(mu);
      out.records.push_back(std::move(fr));
      if (have_baseline) {
        out.records.push_back(std::move(br));
        if (g.edge_count() <= spec.verify_max_m && fast.components != base.components) {
          out.diverged = true;
          out.divergence_note += "fast/baseline mismatch: family=" + cell.family +
                                 " m=" + std::to_string(g.edge_count()) +
                                 " mode=" + spec.mode + " k=" + std::to_string(spec.k) +
                                 " seed=" + std::to_string(spec.seed) + "\n";
        }
      }
    }
  };

  int threads = std::min<int>(harness_thread_cap(), static_cast<int>(cells.size()));
  threads = std::max(threads, 1);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(out.records.begin(), out.records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.family, a.m, a.mode, a.algorithm) <
           std::tie(b.family, b.m, b.mode, b.algorithm);
  });
  return out;
}

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "family,n,m,k,mode,algorithm,wall_seconds,edges_scanned,recursion_depth,components\n";
  for (const BenchRecord& r : records) {
    out << r.family << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.mode << ','
        << r.algorithm << ',' << r.wall_seconds << ',' << r.edges_scanned << ','
        << r.recursion_depth << ',' << r.component_count << '\n';
  }
  return out.str();
}

}  // namespace kconn
