#include "trisq/error.hpp"
#include "trisq/polytope.hpp"
#include "trisq/sample.hpp"

#include <doctest.h>

using namespace trisq;

TEST_CASE("tiny cases") {
  CHECK(sample_regular(3, 4, 1) == complete_graph(4));
  CHECK_THROWS_AS(sample_regular(3, 5, 1), Error);
  CHECK_THROWS_AS(sample_regular(3, 3, 1), Error);
  const auto batch = sample_batch(3, 4, 5, 9);
  for (const auto& p : batch.points) CHECK(p == QPoint{Rat(1), make_rat(3, 4)});
}

TEST_CASE("samples are regular, simple and reproducible") {
  for (unsigned r : {3u, 4u, 6u}) {
    const Graph a = sample_regular(r, 60, 42, 3);
    CHECK(a.regular_degree() == r);
    CHECK(a == sample_regular(r, 60, 42, 3));
    CHECK_FALSE(a == sample_regular(r, 60, 42, 4));
  }
}

TEST_CASE("batch membership and mass transport") {
  const auto batch = sample_batch(3, 20, 200, 5);
  CHECK(batch.points.size() == 200);
  for (const auto loc : batch.locations) CHECK(loc != Location::outside);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Graph g = sample_regular(3, 20, 5, i);
    std::int64_t s42 = 0, s43 = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto p = local_profile(g, x);
      s42 += p.types[1];
      s43 += p.types[2];
    }
    CHECK(s42 == s43);
  }
}

TEST_CASE("batch is independent of the thread count") {
  const auto a = sample_batch(4, 30, 40, 8, 1);
  const auto b = sample_batch(4, 30, 40, 8, 3);
  CHECK(batch_to_json(a) == batch_to_json(b));
  CHECK(batch_to_csv(a) == batch_to_csv(b));
}

TEST_CASE("summary statistics") {
  const auto batch = sample_batch(3, 12, 30, 2);
  Rat sx = 0, sy = 0;
  for (const auto& p : batch.points) {
    sx += p.x;
    sy += p.y;
    CHECK(batch.min.x <= p.x);
    CHECK(batch.max.y >= p.y);
  }
  CHECK(batch.mean == QPoint{Rat(sx / 30), Rat(sy / 30)});
}

TEST_CASE("csv layout") {
  const auto csv = batch_to_csv(sample_batch(3, 4, 2, 1));
  CHECK(csv == "index,d3_num,d3_den,d4_num,d4_den,classification\n0,1,1,3,4,boundary\n1,1,1,3,4,boundary\n");
}
