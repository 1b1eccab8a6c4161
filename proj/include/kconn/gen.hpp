#pragma once

#include <cstdint>
#include <utility>

#include "kconn/digraph.hpp"

namespace kconn {

/// `cycles` directed cycles of length `len`, chained: a forward connector
/// from the last vertex of each cycle to the head of the next, and a back
/// connector from the last vertex of every cycle but the first to vertex 0.
/// Cycles are emitted last-first so that edge 0 is always a strong bridge of
/// the remaining piece; this family drives the decomposition to its maximum
/// depth. m = cycles*(len+2) - 2.
Digraph gen_cycle_chain(int cycles, int len);

/// m uniformly random non-loop edges (parallel edges possible).
Digraph gen_random_digraph(int n, long long m, uint64_t seed);

/// `cliques` bidirected cliques of `size` vertices each, consecutive cliques
/// joined by `bridges` bidirected edges. Each clique is (size-1)-edge-
/// connected; the joints have directed cut value `bridges`.
Digraph gen_planted_cliques(int cliques, int size, int bridges);

/// m distinct random undirected edges (no loops, no duplicates; m is capped
/// at n*(n-1)/2).
std::vector<std::pair<VertexId, VertexId>> gen_random_undirected(int n, long long m,
                                                                 uint64_t seed);

/// Bidirected digraph of gen_random_undirected.
Digraph gen_bidirected(int n, long long m, uint64_t seed);

}  // namespace kconn
