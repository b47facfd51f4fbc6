#pragma once

#include "trisq/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trisq {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..n-1, stored as CSR with
// sorted neighbor lists. Immutable once built.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws Error(invalid_argument) on loops, duplicate edges or endpoints >= n.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return targets_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // The common degree if every vertex has it. The empty graph on zero
  // vertices reports nullopt.
  std::optional<std::size_t> regular_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  // Adjacency rows for graphs with at most 64 vertices; the exhaustive
  // suites live entirely in that range.
  std::vector<std::uint64_t> rows_;
};

// Generators.
Graph complete_graph(std::size_t k);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t m);
Graph path_graph(std::size_t m);
Graph petersen_graph();
Graph robertson_graph();
Graph prism_graph();  // C_3 x K_2

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct GraphCopies {
  const Graph* graph;
  std::size_t copies;
};
Graph disjoint_union(std::span<const GraphCopies> parts);

// Per-vertex cycle statistics.
struct LocalProfile {
  std::int64_t c3 = 0;
  std::int64_t c4 = 0;
  // Weighted square count computed from the neighborhood graph alone.
  std::int64_t ct = 0;
  // Four-cycles x-a-b-c-x split by which diagonals (xb, ac) are present:
  // [0] both, [1] only xb, [2] only ac, [3] neither.
  std::int64_t types[4] = {0, 0, 0, 0};
  // Degrees inside the neighborhood graph, non-increasing.
  std::vector<std::int64_t> nbhd_degrees;
};

// Throws out_of_range for a bad vertex and not_regular when require_regular
// is set and g is not regular.
LocalProfile local_profile(const Graph& g, Vertex x, bool require_regular = false);

struct CycleTotals {
  BigInt triangles;
  BigInt squares;
};

// Totals from the per-vertex sums, cross-checked against a direct count.
CycleTotals cycle_totals(const Graph& g);

// (d3, d4) for a regular graph with at least one vertex.
QPoint cycle_point(const Graph& g);

struct TripleProfile {
  std::int64_t edges = 0;
  std::int64_t n[4] = {0, 0, 0, 0};  // triples spanning 0..3 edges
};
TripleProfile triple_profile(const Graph& h);

Graph neighborhood_graph(const Graph& g, Vertex x);

// Cherries with both leaves in N(x) whose node lies outside {x} and N(x).
std::int64_t type2_cherries(const Graph& g, Vertex x);

// Largest possible number of four-cycles through a vertex of an r-regular
// graph whose neighborhood graph has the given (non-increasing) degrees.
std::int64_t max_c4_given_degrees(std::size_t r, std::span<const std::int64_t> degrees);

// Graph file formats. JSON: {"n": N, "edges": [[u, v], ...]}. Edge list:
// one "u v" pair per line, '#' comments, optional "# n N" header.
Graph graph_from_json(std::string_view text);
std::string graph_to_json(const Graph& g);
Graph graph_from_edge_list(std::string_view text);
// Picks the format from the first non-blank character.
Graph graph_from_text(std::string_view text);
Graph load_graph(const std::string& path);

}  // namespace trisq
