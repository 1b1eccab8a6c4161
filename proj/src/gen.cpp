#include "kconn/gen.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace kconn {

Digraph gen_cycle_chain(int cycles, int len) {
  if (cycles < 1 || len < 2) throw input_error("gen_cycle_chain: need cycles >= 1, len >= 2");
  int n = cycles * len;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = cycles - 1; i >= 0; --i) {
    int base = i * len;
    for (int v = base; v < base + len - 1; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(base + len - 1, base);
  }
  for (int i = 0; i + 1 < cycles; ++i) {
    edges.emplace_back(i * len + len - 1, (i + 1) * len);
  }
  for (int i = 1; i < cycles; ++i) {
    edges.emplace_back(i * len + len - 1, 0);
  }
  return from_edge_list(n, edges);
}

Digraph gen_random_digraph(int n, long long m, uint64_t seed) {
  if (n < 2) throw input_error("gen_random_digraph: need n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  while (static_cast<long long>(edges.size()) < m) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    edges.emplace_back(a, b);
  }
  return from_edge_list(n, edges);
}

Digraph gen_planted_cliques(int cliques, int size, int bridges) {
  if (cliques < 1 || size < 2) {
    throw input_error("gen_planted_cliques: need cliques >= 1, size >= 2");
  }
  int n = cliques * size;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int c = 0; c < cliques; ++c) {
    int base = c * size;
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) {
        edges.emplace_back(base + a, base + b);
        edges.emplace_back(base + b, base + a);
      }
    }
  }
  for (int c = 0; c + 1 < cliques; ++c) {
    for (int j = 0; j < bridges; ++j) {
      int t = c * size + (j == 0 ? size - 1 : (j - 1) % size);
      int h = (c + 1) * size + j % size;
      edges.emplace_back(t, h);
      edges.emplace_back(h, t);
    }
  }
  return from_edge_list(n, edges);
}

std::vector<std::pair<VertexId, VertexId>> gen_random_undirected(int n, long long m,
                                                                 uint64_t seed) {
  if (n < 2) throw input_error("gen_random_undirected: need n >= 2");
  long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  m = std::min(m, max_m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::set<std::pair<int, int>> used;
  std::vector<std::pair<VertexId, VertexId>> edges;
  while (static_cast<long long>(edges.size()) < m) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) continue;
    edges.emplace_back(a, b);
  }
  return edges;
}

Digraph gen_bidirected(int n, long long m, uint64_t seed) {
  auto und = gen_random_undirected(n, m, seed);
  std::vector<std::pair<VertexId, VertexId>> dir;
  dir.reserve(und.size() * 2);
  for (const auto& [a, b] : und) {
    dir.emplace_back(a, b);
    dir.emplace_back(b, a);
  }
  return from_edge_list(n, dir);
}

}  // namespace kconn
