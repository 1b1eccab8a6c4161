#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "kconn/cuts.hpp"
#include "kconn/oracles.hpp"
#include "kconn/scc.hpp"
#include "kconn/solvers.hpp"

using namespace kconn;

namespace {

std::vector<VertexSet> comps(const ComponentReport& r) { return r.components; }

Digraph induced_on(const Digraph& g, const VertexSet& s) {
  return induced_subgraph(g, s).graph;
}

}  // namespace

TEST_CASE("max_2ecs on the fixtures") {
  CHECK(comps(max_2ecs(fixtures::twin_cycles())).empty());
  CHECK(comps(max_2ecs(fixtures::clique_pair())) ==
        std::vector<VertexSet>{{0, 1, 2, 3, 4, 5, 6, 7}});
  CHECK(comps(max_2ecs(fixtures::bi_k4())) == std::vector<VertexSet>{{0, 1, 2, 3}});
}

TEST_CASE("max_2vcs on the fixtures") {
  CHECK(comps(max_2vcs(fixtures::shared_hub())) ==
        std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
  CHECK(comps(max_2vcs(fixtures::bi_k4())) == std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(comps(max_2vcs(fixtures::twin_cycles())).empty());
}

TEST_CASE("max_kecs on the fixtures") {
  CHECK(comps(max_kecs(fixtures::clique_pair(), 3)) ==
        std::vector<VertexSet>{{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK(comps(max_kecs(fixtures::clique_pair(), 2)) ==
        std::vector<VertexSet>{{0, 1, 2, 3, 4, 5, 6, 7}});
  CHECK(comps(max_kecs(fixtures::bi_k4(), 4)).empty());
  CHECK(comps(max_kecs(fixtures::planted_kout(), 3)) ==
        std::vector<VertexSet>{{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9, 10, 11}});
  CHECK_THROWS_AS(max_kecs(fixtures::bi_k4(), 1), input_error);
}

TEST_CASE("split semantics") {
  Digraph c = fixtures::shared_hub();
  std::vector<VertexId> origin(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) origin[v] = v;

  long long before = c.edge_count();
  VertexId xp = split(c, origin, 2, {0, 1});
  CHECK(c.edge_count() == before);
  CHECK(origin[xp] == 2);

  auto d = strongly_connected_components(c);
  std::vector<VertexSet> got = d.components;
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<VertexSet>{{0, 1, xp}, {2, 3, 4}});

  // Empty neighbor set: the copy is isolated.
  Digraph b = fixtures::bi_k4();
  std::vector<VertexId> origin_b{0, 1, 2, 3};
  VertexId iso = split(b, origin_b, 0, {});
  CHECK(b.edge_count() == 12);
  CHECK(b.out_edges(iso).empty());
  CHECK(b.in_edges(iso).empty());
}

TEST_CASE("max_kecs_undirected examples") {
  // Two K4s joined by two undirected edges: 3-edge-connected parts are the K4s.
  fixtures::EdgeList joined;
  for (int base : {0, 4}) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) joined.emplace_back(base + a, base + b);
    }
  }
  joined.emplace_back(3, 4);
  joined.emplace_back(0, 5);
  auto r = max_kecs_undirected(8, joined, 3);
  CHECK(comps(r) == std::vector<VertexSet>{{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK(r.mode == "kecs-undirected");

  // Undirected cycle at k=2: the whole cycle.
  fixtures::EdgeList cycle{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(comps(max_kecs_undirected(4, cycle, 2)) ==
        std::vector<VertexSet>{{0, 1, 2, 3}});

  // Tree at k=2: nothing.
  fixtures::EdgeList tree{{0, 1}, {1, 2}, {1, 3}};
  CHECK(comps(max_kecs_undirected(4, tree, 2)).empty());
}

TEST_CASE("undirected delta default is ceil(m/sqrt(n))") {
  fixtures::EdgeList cycle{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  auto r = max_kecs_undirected(4, cycle, 2);
  // 8 directed edges, sqrt(4) = 2.
  CHECK(r.stats.delta == 4);
}

TEST_CASE("fast solvers match the baselines on a random mini corpus") {
  std::mt19937_64 rng(1337);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 4 + static_cast<int>(rng() % 22);
    int m = n + static_cast<int>(rng() % (4 * n));
    Digraph g = fixtures::random_digraph(n, m, rng);

    CHECK(max_2ecs(g).components == baseline_2ecs(g).components);
    CHECK(max_2vcs(g).components == baseline_2vcs(g).components);
    CHECK(max_kecs(g, 3).components == baseline_kecs(g, 3).components);
  }
}

TEST_CASE("reported components satisfy their connectivity definitions") {
  std::mt19937_64 rng(4321);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 4 + static_cast<int>(rng() % 25);
    int m = 2 * n + static_cast<int>(rng() % (3 * n));
    Digraph g = fixtures::random_digraph(n, m, rng);

    for (int k : {2, 3}) {
      auto rep = max_kecs(g, k);
      std::set<VertexId> used;
      for (const VertexSet& c : rep.components) {
        Digraph sub = induced_on(g, c);
        CHECK(is_strongly_connected(sub));
        CHECK(!small_edge_cut(sub, k));
        for (VertexId v : c) {
          CHECK(used.insert(v).second);  // pairwise disjoint
        }
      }
    }

    auto rep = max_2vcs(g);
    for (size_t i = 0; i < rep.components.size(); ++i) {
      const VertexSet& c = rep.components[i];
      CHECK(c.size() >= 3);
      Digraph sub = induced_on(g, c);
      CHECK(is_strongly_connected(sub));
      CHECK(strong_articulation_points(sub).empty());
      for (size_t j = i + 1; j < rep.components.size(); ++j) {
        VertexSet overlap;
        std::set_intersection(c.begin(), c.end(), rep.components[j].begin(),
                              rep.components[j].end(), std::back_inserter(overlap));
        CHECK(overlap.size() <= 1);
      }
    }
  }
}

TEST_CASE("include_singletons reports isolated vertices for the edge modes") {
  Digraph g = from_edge_list(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
  SolveOptions opts;
  opts.include_singletons = true;
  auto rep = max_2ecs(g, opts);
  CHECK(std::find(rep.components.begin(), rep.components.end(), VertexSet{3}) !=
        rep.components.end());
  CHECK(max_2ecs(g).components == std::vector<VertexSet>{{0, 1, 2}});
}

TEST_CASE("stats are populated and within the declared bounds") {
  Digraph g = fixtures::clique_pair();
  auto rep = max_kecs(g, 3);
  CHECK(rep.stats.m0 == 28);
  CHECK(rep.stats.delta == 5);
  CHECK(rep.stats.recursion_depth >= 1);
  CHECK(rep.stats.worklist_violations == 0);

  auto rep2 = max_2vcs(fixtures::shared_hub());
  CHECK(rep2.stats.splits <= 2 * rep2.stats.m0 - 5);
  CHECK(rep2.stats.aux_peak <= 2 * rep2.stats.m0 - 5);
}
