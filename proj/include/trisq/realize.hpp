#pragma once

#include "trisq/graph.hpp"
#include "trisq/hypergraph.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace trisq {

// Disjoint union of a * |V(g2)| copies of g1 and (b - a) * |V(g1)| copies
// of g2 for q = a/b in (0, 1); its cycle point is q P(g1) + (1 - q) P(g2).
Graph combine_pair(const Rat& q, const Graph& g1, const Graph& g2);

// Extreme graphs keyed by (r, l, seed), built once and shared.
class ComponentCache {
public:
  std::shared_ptr<const ExtremeGraph> get(unsigned r, unsigned l, std::uint64_t seed);

private:
  std::mutex mutex_;
  std::map<std::tuple<unsigned, unsigned, std::uint64_t>, std::shared_ptr<const ExtremeGraph>> cache_;
};

struct BlueprintComponent {
  unsigned level = 0;  // l of C^r_l; 0 is K_{r,r}
  std::shared_ptr<const ExtremeGraph> generator;
  QPoint point;  // cycle point of the generator
  Rat weight;
  BigInt copies;
};

struct Blueprint {
  unsigned r = 0;
  QPoint target;
  std::vector<BlueprintComponent> components;
  BigInt total_order;

  // The disjoint union itself. Throws invalid_argument when the order
  // exceeds max_order.
  Graph build(std::size_t max_order = 5'000'000) const;
};

// Writes the target point of Q^r as a convex combination of at most three
// polygon vertices (fan triangulation from the origin, lower-indexed
// triangle on ties) and scales the weights to integral copy counts with the
// least total order. Throws outside_region for targets outside Q^r.
Blueprint realize(unsigned r, const QPoint& target, std::uint64_t seed = 1, ComponentCache* cache = nullptr);

// Cycle point of the blueprint recomputed from each generator's own counts
// and the copy numbers, without building the union.
QPoint blueprint_point(const Blueprint& bp);

std::string blueprint_to_json(const Blueprint& bp);

}  // namespace trisq
