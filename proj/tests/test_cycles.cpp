#include "oracles.hpp"
#include "trisq/error.hpp"
#include "trisq/graph.hpp"
#include "trisq/sample.hpp"

#include <doctest.h>

using namespace trisq;

namespace {

void compare_with_oracle(const Graph& g) {
  std::int64_t s3 = 0, s4 = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    const LocalProfile p = local_profile(g, x);
    const auto o = oracle::vertex_counts(g, x);
    CAPTURE(x);
    CHECK(p.c3 == o.c3);
    CHECK(p.c4 == o.c4);
    CHECK(p.ct == o.ct);
    for (int t = 0; t < 4; ++t) CHECK(p.types[t] == o.types[t]);
    s3 += p.c3;
    s4 += p.c4;
  }
  const auto totals = cycle_totals(g);
  CHECK(totals.triangles == oracle::total_triangles(g));
  CHECK(totals.squares == oracle::total_squares(g));
  CHECK(3 * totals.triangles == s3);
  CHECK(4 * totals.squares == s4);
}

}  // namespace

TEST_CASE("K4 profile") {
  const Graph g = complete_graph(4);
  const LocalProfile p = local_profile(g, 0);
  CHECK(p.c3 == 3);
  CHECK(p.c4 == 3);
  CHECK(p.types[0] == 3);
  CHECK(p.ct == 3);
  CHECK(p.nbhd_degrees == std::vector<std::int64_t>{2, 2, 2});
  CHECK(cycle_point(g) == QPoint{Rat(1), make_rat(3, 4)});
}

TEST_CASE("K33 and Petersen") {
  const Graph k33 = complete_bipartite(3, 3);
  const LocalProfile p = local_profile(k33, 0);
  CHECK(p.c3 == 0);
  CHECK(p.c4 == 6);
  CHECK(p.types[3] == 6);
  CHECK(cycle_point(k33) == QPoint{Rat(0), make_rat(3, 2)});
  CHECK(type2_cherries(k33, 0) == 6);
  CHECK(cycle_point(petersen_graph()) == QPoint{Rat(0), Rat(0)});
  CHECK(type2_cherries(petersen_graph(), 0) == 0);
}

TEST_CASE("counts against brute force on named graphs") {
  for (const Graph& g : {complete_graph(5), complete_bipartite(3, 4), prism_graph(), petersen_graph(), robertson_graph(),
                         cycle_graph(4), complete_graph(6)})
    compare_with_oracle(g);
}

TEST_CASE("counts against brute force on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const double p = 0.15 + 0.02 * static_cast<double>(seed % 35);
    CAPTURE(seed);
    compare_with_oracle(oracle::random_graph(9, p, seed));
  }
}

TEST_CASE("mass transport and tilde bound hold in any graph") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const Graph g = oracle::random_graph(10, 0.5, seed);
    std::int64_t s42 = 0, s43 = 0, st = 0, s4 = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto p = local_profile(g, x);
      s42 += p.types[1];
      s43 += p.types[2];
      st += p.ct;
      s4 += p.c4;
    }
    CHECK(s42 == s43);
    CHECK(st <= s4);
  }
}

TEST_CASE("neighborhood graph") {
  const Graph k4 = complete_graph(4);
  CHECK(neighborhood_graph(k4, 2) == complete_graph(3));
  CHECK(neighborhood_graph(petersen_graph(), 0).size() == 0);
}

TEST_CASE("max c4 from neighborhood degrees") {
  const std::int64_t example[] = {1, 1, 0, 0};
  CHECK(max_c4_given_degrees(4, example) == 13);
  CHECK(oracle::max_c4_by_assignment(4, {1, 1, 0, 0}) == 13);

  for (std::size_t r : {3u, 4u}) {
    // all non-increasing sequences with entries below r
    std::vector<std::int64_t> d(r, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t cap) {
      if (i == r) {
        CAPTURE(r);
        CAPTURE(d);
        CHECK(max_c4_given_degrees(r, d) == oracle::max_c4_by_assignment(r, d));
        return;
      }
      for (std::int64_t v = 0; v <= cap; ++v) {
        d[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, static_cast<std::int64_t>(r) - 1);
  }
}

TEST_CASE("max c4 validates input") {
  const std::int64_t wrong_length[] = {1, 1};
  const std::int64_t increasing[] = {0, 1, 1};
  const std::int64_t too_big[] = {3, 0, 0};
  CHECK_THROWS_AS(max_c4_given_degrees(3, wrong_length), Error);
  CHECK_THROWS_AS(max_c4_given_degrees(3, increasing), Error);
  CHECK_THROWS_AS(max_c4_given_degrees(3, too_big), Error);
}

TEST_CASE("per-vertex c4 never exceeds the degree bound on samples") {
  for (unsigned r : {3u, 4u, 5u})
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Graph g = sample_regular(r, 24, 11, s);
      for (Vertex x = 0; x < g.order(); ++x) {
        const auto p = local_profile(g, x, true);
        CHECK(p.c4 <= max_c4_given_degrees(r, p.nbhd_degrees));
      }
    }
}

TEST_CASE("triple profile identities and complement duality") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t v = 3 + seed % 6;
    const Graph h = oracle::random_graph(v, 0.5, seed);
    const auto t = triple_profile(h);
    const auto c = triple_profile(complement(h));
    const auto vv = static_cast<std::int64_t>(v);
    CHECK(t.n[0] + t.n[1] + t.n[2] + t.n[3] == choose3(vv));
    CHECK(t.n[1] + 2 * t.n[2] + 3 * t.n[3] == (vv - 2) * t.edges);
    CHECK(2 * t.n[3] + t.n[2] == t.n[0] + (vv - 2) * t.edges - choose3(vv));
    for (int i = 0; i < 4; ++i) CHECK(t.n[i] == c.n[3 - i]);
    CHECK(t.n[3] == oracle::total_triangles(h));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(cycle_point(path_graph(3)), Error);
  CHECK_THROWS_AS(cycle_point(Graph(0)), Error);
  CHECK_THROWS_AS(local_profile(complete_graph(3), 3), Error);
  CHECK_THROWS_AS(local_profile(path_graph(3), 0, true), Error);
}
