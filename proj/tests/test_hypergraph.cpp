#include "oracles.hpp"
#include "trisq/error.hpp"
#include "trisq/hypergraph.hpp"

#include <doctest.h>

using namespace trisq;

namespace {

Hypergraph fano() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Partition parts(std::vector<unsigned> p) { return Partition{std::move(p)}; }

}  // namespace

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph(3, {{0}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), Error);
  const Hypergraph h(4, {{2, 0, 1}, {3, 1}});
  CHECK(h.hyperedges()[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(h.incident(1) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("berge girth examples") {
  CHECK(berge_girth(Hypergraph(3, {{0, 1, 2}})) == std::nullopt);
  CHECK(berge_girth(Hypergraph(4, {{0, 1, 2}, {1, 2, 3}})) == 2u);
  CHECK(berge_girth(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})) == 3u);
  CHECK(berge_girth(fano()) == 3u);
  CHECK(berge_girth_at_least(fano(), 3));
  CHECK_FALSE(berge_girth_at_least(fano(), 4));
}

TEST_CASE("berge girth against depth-first oracle") {
  trisq::CounterRng rng(5, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 5 + rng.uniform(4);
    std::vector<std::vector<Vertex>> edges;
    const std::size_t m = 2 + rng.uniform(4);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), 0);
      rng.shuffle(std::span<Vertex>(all));
      all.resize(2 + rng.uniform(2));
      edges.push_back(all);
    }
    const Hypergraph h(n, edges);
    const std::size_t want = oracle::berge_girth(h, 16);
    CAPTURE(hypergraph_to_json(h));
    CHECK(berge_girth(h).value_or(0) == want);
  }
}

TEST_CASE("extreme closed forms") {
  CHECK(extreme_counts(3, parts({3})).c3 == 3);
  CHECK(extreme_counts(3, parts({3})).c4 == 3);
  const auto c = extreme_counts(3, parts({1, 2}));
  CHECK(c.c3 == 1);
  CHECK(c.c4 == 0);
  CHECK(extreme_counts(3, Partition{}).c4 == 6);
  CHECK(Partition::balanced(7, 3).parts == std::vector<unsigned>{2, 2, 3});
  CHECK(Partition::balanced(5, 0).parts.empty());
}

TEST_CASE("construct: single size") {
  const Hypergraph h = construct_girth5_hypergraph(DegreeProfile{{3}}, 1, 9);
  CHECK(h.order() == 9);
  CHECK(h.size() == 3);
  CHECK(berge_girth(h) == std::nullopt);
}

TEST_CASE("construct: 2-uniform profiles") {
  const Hypergraph c = construct_girth5_hypergraph(DegreeProfile{{2, 2}}, 3, 5);
  const Graph g = clique_expansion(c);
  CHECK(g.regular_degree() == 2u);
  CHECK(berge_girth(c).value_or(0) >= 5);

  ConstructOptions no_shortcut;
  no_shortcut.allow_known_graphs = false;
  const Hypergraph cubic = construct_girth5_hypergraph(DegreeProfile{{2, 2, 2}}, 7, 10, no_shortcut);
  CHECK(clique_expansion(cubic).regular_degree() == 3u);
  CHECK(berge_girth(cubic).value_or(0) >= 5);
}

TEST_CASE("construct: mixed sizes are deterministic and regular") {
  const DegreeProfile profile{{2, 3, 3}};
  const Hypergraph a = construct_girth5_hypergraph(profile, 11, 0);
  const Hypergraph b = construct_girth5_hypergraph(profile, 11, 0);
  CHECK(a.hyperedges() == b.hyperedges());
  for (Vertex v = 0; v < a.order(); ++v) {
    std::vector<std::size_t> sizes;
    for (std::size_t e : a.incident(v)) sizes.push_back(a.hyperedges()[e].size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 3, 3});
  }
  CHECK(berge_girth(a).value_or(0) >= 5);
  // no Berge cycle of length at most 4
  CHECK(oracle::berge_girth(a, 4) == 0);
}

TEST_CASE("reference recursion on tiny parameters") {
  const Hypergraph c = construct_by_recursion(5, DegreeProfile{{2, 2}});
  CHECK(clique_expansion(c).regular_degree() == 2u);
  CHECK(berge_girth(c).value_or(0) >= 5);
  const Hypergraph one = construct_by_recursion(5, DegreeProfile{{4}});
  CHECK(one.size() == 1);
  CHECK_THROWS_AS(construct_by_recursion(5, DegreeProfile{{3, 3, 3}}, 50), Error);
}

TEST_CASE("clique expansion examples") {
  CHECK(clique_expansion(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}})) == path_graph(4));
  CHECK(clique_expansion(Hypergraph(5, {{0, 1, 2, 3, 4}})) == complete_graph(5));
  const Graph u = clique_expansion(Hypergraph(5, {{0, 1}, {2, 3, 4}}));
  CHECK(u.size() == 4);
  CHECK(u.has_edge(2, 4));
}

TEST_CASE("extreme graph examples") {
  CHECK(extreme_graph(3, parts({3})).graph == complete_graph(4));
  const auto tree_like = extreme_graph(3, parts({1, 1, 1}));
  CHECK(cycle_point(tree_like.graph) == QPoint{Rat(0), Rat(0)});
  const auto mixed = extreme_graph(3, parts({1, 2}), 4);
  for (Vertex x = 0; x < mixed.graph.order(); ++x) {
    const auto p = local_profile(mixed.graph, x, true);
    CHECK(p.c3 == 1);
    CHECK(p.c4 == 0);
  }
  CHECK(extreme_graph_level(4, 0).graph == complete_bipartite(4, 4));
  CHECK_THROWS_AS(extreme_graph(2, parts({1, 1})), Error);
}

TEST_CASE("verify_extreme examples") {
  CHECK(verify_extreme(complete_graph(4), 3, parts({3})).passed());
  CHECK(verify_extreme(petersen_graph(), 3, parts({1, 1, 1})).passed());
  CHECK_FALSE(verify_extreme(complete_bipartite(3, 3), 3, parts({1, 2})).passed());
  CHECK(verify_extreme(complete_bipartite(3, 3), 3, Partition{}).passed());
  CHECK_FALSE(verify_extreme(prism_graph(), 3, parts({1, 1, 1})).passed());
}

TEST_CASE("extreme graphs for unbalanced partitions") {
  for (const auto& p : {parts({1, 4}), parts({2, 3}), parts({1, 1, 3}), parts({1, 2, 2}), parts({1, 1, 1, 2})}) {
    CAPTURE(p.to_string());
    const auto e = extreme_graph(5, p, 2);
    const auto rep = verify_extreme(e.graph, 5, p, e.hypergraph ? &*e.hypergraph : nullptr);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    const auto want = extreme_counts(5, p);
    for (Vertex x = 0; x < e.graph.order(); x += 7) {
      const auto o = oracle::vertex_counts(e.graph, x);
      CHECK(o.c3 == want.c3);
      CHECK(o.c4 == want.c4);
      CHECK(o.types[1] == 0);
    }
  }
}

TEST_CASE("hypergraph json") {
  const Hypergraph h = fano();
  const Hypergraph back = hypergraph_from_json(hypergraph_to_json(h));
  CHECK(back.order() == 7);
  CHECK(back.hyperedges() == h.hyperedges());
  CHECK_THROWS_AS(hypergraph_from_json(R"({"n": 3, "hyperedges": [[0]]})"), Error);
  CHECK_THROWS_AS(hypergraph_from_json(R"({"hyperedges": []})"), Error);
}
