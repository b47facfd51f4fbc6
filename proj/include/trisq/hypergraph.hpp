#pragma once

#include "trisq/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trisq {

class Hypergraph {
public:
  Hypergraph() = default;
  // Each hyperedge is sorted on construction. Throws invalid_argument for
  // hyperedges with fewer than two vertices, repeated vertices, or vertices
  // outside 0..n-1.
  Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> hyperedges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<std::vector<Vertex>>& hyperedges() const noexcept { return edges_; }
  // Indices of the hyperedges containing v, ascending.
  const std::vector<std::size_t>& incident(Vertex v) const { return incident_[v]; }

private:
  std::size_t n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Required sizes of the hyperedges through every vertex; r = sizes.size().
struct DegreeProfile {
  std::vector<std::size_t> sizes;

  std::size_t r() const noexcept { return sizes.size(); }
  void validate() const;
};

// A partition r = r_1 + ... + r_l with parts sorted ascending. An empty
// partition stands for the K_{r,r} label l = 0.
struct Partition {
  std::vector<unsigned> parts;

  // Parts floor((r + i - 1) / l), i = 1..l; l = 0 gives the empty partition.
  static Partition balanced(unsigned r, unsigned l);
  unsigned total() const;
  std::string to_string() const;
};

// Per-vertex counts of the extreme graph for a partition of r:
// c3 = sum C(r_i, 2), c4 = sum r_i C(r_i - 1, 2); l = 0 gives K_{r,r}.
struct ExtremeCounts {
  std::int64_t c3;
  std::int64_t c4;
};
ExtremeCounts extreme_counts(unsigned r, const Partition& p);

// Shortest Berge cycle (k >= 2 distinct vertices, k distinct hyperedges),
// i.e. half the girth of the vertex-hyperedge incidence graph. nullopt
// when the hypergraph has no Berge cycle.
std::optional<std::size_t> berge_girth(const Hypergraph& h);
// Bounded search: true iff there is no Berge cycle shorter than g.
bool berge_girth_at_least(const Hypergraph& h, std::size_t g);

struct ConstructOptions {
  std::size_t attempts_per_size = 8;
  std::size_t max_vertices = 100000;
  // Disable the known-graph shortcut for 2-uniform profiles.
  bool allow_known_graphs = true;
};

// Random construction of a hypergraph with Berge girth >= 5 in which every
// vertex lies in exactly r hyperedges with sizes equal to profile.sizes.
// The vertex count starts at the least multiple of lcm(sizes) that is at
// least size_hint and doubles whenever the attempt budget for the current
// size runs out. The result is verified before it is returned; failure
// throws construction_failed. Deterministic in (profile, seed, size_hint).
Hypergraph construct_girth5_hypergraph(const DegreeProfile& profile, std::uint64_t seed, std::size_t size_hint,
                                       const ConstructOptions& options = {});

// The double-induction construction taken literally. Its output size grows
// hyper-exponentially in girth and r, so it is only usable on tiny
// parameters; throws construction_failed above max_vertices.
Hypergraph construct_by_recursion(std::size_t girth, const DegreeProfile& profile, std::size_t max_vertices = 100000);

Graph clique_expansion(const Hypergraph& h);

struct ExtremeGraph {
  Graph graph;
  // Source hypergraph; empty for K_{r,r}.
  std::optional<Hypergraph> hypergraph;
  std::string backend;
};

// r-regular graph whose every neighborhood is a disjoint union of cliques
// with sizes given by the partition, with no type-2 cherries. The empty
// partition yields K_{r,r}.
ExtremeGraph extreme_graph(unsigned r, const Partition& partition, std::uint64_t seed = 1);
// Balanced partition into l parts (C^r_l); l = 0 yields K_{r,r}.
ExtremeGraph extreme_graph_level(unsigned r, unsigned l, std::uint64_t seed = 1);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExtremeReport {
  std::vector<Check> checks;
  bool passed() const;
};

// Structural audit of a candidate extreme graph, computed from the graph
// itself. When the source hypergraph is given its Berge girth is checked
// as well.
ExtremeReport verify_extreme(const Graph& g, unsigned r, const Partition& partition,
                             const Hypergraph* source = nullptr);

Hypergraph hypergraph_from_json(std::string_view text);
std::string hypergraph_to_json(const Hypergraph& h);

}  // namespace trisq
