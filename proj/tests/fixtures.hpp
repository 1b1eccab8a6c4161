// Shared graphs and corpus helpers for the test suites.
#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "kconn/digraph.hpp"
#include "kconn/scc.hpp"

namespace fixtures {

using kconn::Digraph;
using kconn::VertexId;

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Two directed triangles tied together by (2,3) and (5,0).
inline Digraph twin_cycles() {
  return kconn::from_edge_list(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}, {5, 0}});
}

// Bidirected K4.
inline Digraph bi_k4() {
  EdgeList edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      edges.emplace_back(a, b);
      edges.emplace_back(b, a);
    }
  }
  return kconn::from_edge_list(4, edges);
}

// Two bidirected triangles sharing vertex 2, with the hub edges toward the
// second triangle doubled (16 edges total).
inline Digraph shared_hub() {
  EdgeList edges = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1},
                    {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 4}, {4, 3},
                    {2, 3}, {3, 2}, {2, 4}, {4, 2}};
  return kconn::from_edge_list(5, edges);
}

// Two bidirected K4s joined by the bidirected edges (3,4) and (0,5).
inline Digraph clique_pair() {
  EdgeList edges;
  for (int base : {0, 4}) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        edges.emplace_back(base + a, base + b);
        edges.emplace_back(base + b, base + a);
      }
    }
  }
  edges.emplace_back(3, 4);
  edges.emplace_back(4, 3);
  edges.emplace_back(0, 5);
  edges.emplace_back(5, 0);
  return kconn::from_edge_list(8, edges);
}

// A bidirected K4 on {0..3} and a bidirected K8 on {4..11}, connected by
// (0,4), (1,4) and (4,0): 71 edges.
inline Digraph planted_kout() {
  EdgeList edges;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      edges.emplace_back(a, b);
      edges.emplace_back(b, a);
    }
  }
  for (int a = 4; a < 12; ++a) {
    for (int b = a + 1; b < 12; ++b) {
      edges.emplace_back(a, b);
      edges.emplace_back(b, a);
    }
  }
  edges.emplace_back(0, 4);
  edges.emplace_back(1, 4);
  edges.emplace_back(4, 0);
  return kconn::from_edge_list(12, edges);
}

inline std::vector<Digraph> all_fixtures() {
  std::vector<Digraph> v;
  v.push_back(twin_cycles());
  v.push_back(bi_k4());
  v.push_back(shared_hub());
  v.push_back(clique_pair());
  v.push_back(planted_kout());
  return v;
}

// Random digraph with exactly m edges (parallels allowed, no self-loops).
inline Digraph random_digraph(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  EdgeList edges;
  edges.reserve(m);
  while (static_cast<int>(edges.size()) < m) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    edges.emplace_back(a, b);
  }
  return kconn::from_edge_list(n, edges);
}

// Random digraph that is strongly connected (rejection sampling).
// A random Hamiltonian cycle plus m-n random extra edges: strongly
// connected by construction (rejection sampling stalls at these densities).
inline Digraph random_strongly_connected(int n, int m, std::mt19937_64& rng) {
  if (m < n) m = n;
  std::vector<kconn::VertexId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(order[i], order[(i + 1) % n]);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(edges.size()) < m) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    edges.emplace_back(a, b);
  }
  return kconn::from_edge_list(n, edges);
}

inline EdgeList random_undirected(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  long long cap = static_cast<long long>(n) * (n - 1) / 2;
  if (m > cap) m = static_cast<int>(cap);
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  EdgeList edges;
  while (static_cast<int>(edges.size()) < m) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (used[a][b]) continue;
    used[a][b] = 1;
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace fixtures
