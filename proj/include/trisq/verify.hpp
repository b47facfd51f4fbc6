#pragma once

#include "trisq/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace trisq {

enum class EnumMode { labeled, canonical };

struct EnumSpec {
  unsigned r = 3;
  unsigned n = 4;
  EnumMode mode = EnumMode::labeled;
};

// Return false to stop the enumeration early.
using GraphVisitor = std::function<bool(const Graph&)>;

// Every r-regular graph on vertices 0..n-1, each exactly once (labeled), or
// one representative per isomorphism class (canonical). Returns the number
// of graphs visited. n is limited to 64.
std::uint64_t enumerate_regular(const EnumSpec& spec, const GraphVisitor& visit);
std::vector<Graph> enumerate_regular_all(const EnumSpec& spec);

// Labeled enumeration restricted to the top-level branches (choices of
// vertex 0's neighborhood) whose index is congruent to `part` modulo
// `parts`. The union over part = 0..parts-1 is the full enumeration.
std::uint64_t enumerate_regular_part(const EnumSpec& spec, unsigned part, unsigned parts,
                                     const std::function<bool(const Graph&, std::uint64_t branch)>& visit);

// Lexicographically least upper-triangle adjacency string over all vertex
// orderings, packed into words. Isomorphic graphs and only those share it.
std::vector<std::uint64_t> canonical_form(const Graph& g);

// Complete l-partite graph on v vertices with balanced parts.
Graph turan_graph(unsigned v, unsigned l);

struct PropertyTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct SuiteReport {
  std::string suite;
  std::string parameters;
  std::uint64_t graphs_tested = 0;
  std::vector<PropertyTally> properties;
  // Reported but never counted as failures.
  std::vector<PropertyTally> experimental;
  std::optional<Graph> counterexample;
  std::string counterexample_property;
  bool complete = true;
  double wall_seconds = 0;

  bool all_passed() const { return !counterexample.has_value(); }
};

struct SuiteOptions {
  unsigned jobs = 1;
  // Zero means unlimited; on expiry the report is marked incomplete.
  double time_cap_seconds = 0;
  // Tallies whether (1/2)P(G,x) + (1/2r) sum_{y~x} P(G,y) lies on or above
  // the broken line, for every vertex.
  bool experimental_averaged_points = false;
};

// Region properties on every labeled r-regular graph of order <= n_max,
// plus the extreme graphs C^r_1..C^r_r:
//   point-in-region            P(G) lies in Q^r
//   vertex-under-segment       each (c3(x)/3, c4(x)/4) is on or under P^r_0 P^r_1
//   vertex-c4-degree-bound     c4(x) <= max_c4_given_degrees(r, degrees of G^x)
//   tilde-bound                sum ct(x) <= 4 c4(G)
//   mass-transport             sum c42(x) = sum c43(x)
//   extreme-tilde-equals-point sum ct(x) = 4 c4(G) on the extreme graphs
SuiteReport run_region_suite(unsigned r, unsigned n_max, const SuiteOptions& options = {});

// Same properties on `count` configuration-model samples of order n.
SuiteReport run_sampled_region_suite(unsigned r, std::size_t n, std::size_t count, std::uint64_t seed,
                                     const SuiteOptions& options = {});

// Every graph on v <= v_max vertices: triple identities, the reduction
// 2 n3 + n2 = n0 + (v - 2) e - C(v, 3), and n3 on or above the broken line
// through the Turan points (e(T^v_l), n3(T^v_l)), which the Turan graphs
// themselves must hit exactly.
SuiteReport check_bollobas_instance(unsigned v_max, const SuiteOptions& options = {});

std::string report_to_json(const SuiteReport& report, bool include_time = true);
std::string report_to_text(const SuiteReport& report);

}  // namespace trisq
