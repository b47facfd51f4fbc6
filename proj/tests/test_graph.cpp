#include "trisq/error.hpp"
#include "trisq/graph.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace trisq;

TEST_CASE("construction validates") {
  const Edge loop[] = {{1, 1}};
  const Edge dup[] = {{0, 1}, {1, 0}};
  const Edge range[] = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, loop), Error);
  CHECK_THROWS_AS(Graph(3, dup), Error);
  CHECK_THROWS_AS(Graph(3, range), Error);
}

TEST_CASE("basic queries") {
  const Graph g = petersen_graph();
  CHECK(g.order() == 10);
  CHECK(g.size() == 15);
  CHECK(g.regular_degree() == 3u);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(5, 7));
  CHECK_FALSE(g.has_edge(5, 6));
  CHECK(g.edges().size() == 15);
  CHECK(path_graph(3).regular_degree() == std::nullopt);
  CHECK(Graph(0).regular_degree() == std::nullopt);
}

TEST_CASE("named graphs") {
  CHECK(complete_graph(5).size() == 10);
  CHECK(complete_bipartite(3, 4).size() == 12);
  CHECK(cycle_graph(7).regular_degree() == 2u);
  CHECK(prism_graph().regular_degree() == 3u);
  const Graph rob = robertson_graph();
  CHECK(rob.order() == 19);
  CHECK(rob.regular_degree() == 4u);
}

TEST_CASE("complement and induced subgraph") {
  const Graph c = complement(cycle_graph(5));
  CHECK(c.size() == 5);
  CHECK(c.regular_degree() == 2u);
  const Vertex keep[] = {0, 1, 2};
  const Graph s = induced_subgraph(complete_graph(5), keep);
  CHECK(s == complete_graph(3));
}

TEST_CASE("disjoint union") {
  const Graph k4 = complete_graph(4);
  const Graph c5 = cycle_graph(5);
  const GraphCopies parts[] = {{&k4, 2}, {&c5, 1}};
  const Graph u = disjoint_union(parts);
  CHECK(u.order() == 13);
  CHECK(u.size() == 17);
  CHECK(u.has_edge(4, 7));
  CHECK_FALSE(u.has_edge(3, 4));
}

TEST_CASE("json round trip") {
  const Graph g = petersen_graph();
  const std::string text = graph_to_json(g);
  CHECK(graph_from_json(text) == g);
  CHECK(graph_from_text(text) == g);
  CHECK(graph_to_json(Graph(2)) == R"({"n": 2, "edges": []})");
}

TEST_CASE("json errors") {
  CHECK_THROWS_AS(graph_from_json("{"), Error);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2})"), Error);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "edges": [[0, 2]]})"), Error);
  CHECK_THROWS_AS(graph_from_json(R"({"n": -1, "edges": []})"), Error);
  CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "edges": [[0]]})"), Error);
}

TEST_CASE("edge list") {
  const Graph g = graph_from_edge_list("# triangle\n0 1\n1 2\n\n2 0\n");
  CHECK(g == complete_graph(3));
  const Graph h = graph_from_edge_list("# n 5\n0 1\n");
  CHECK(h.order() == 5);
  CHECK(graph_from_text("0 1\n1 2\n2 0\n") == complete_graph(3));
  CHECK_THROWS_AS(graph_from_edge_list("0 x\n"), Error);
  CHECK_THROWS_AS(graph_from_edge_list("0 1 2\n"), Error);
}

TEST_CASE("load_graph") {
  const std::string path = "trisq_test_graph.json";
  {
    std::ofstream out(path);
    out << graph_to_json(complete_graph(4));
  }
  CHECK(load_graph(path) == complete_graph(4));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_graph("definitely/not/here.json"), Error);
}
