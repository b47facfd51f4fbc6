#include "trisq/hypergraph.hpp"

#include "trisq/error.hpp"
#include "trisq/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace trisq {

Hypergraph::Hypergraph(std::size_t n, std::vector<std::vector<Vertex>> hyperedges)
    : n_(n), edges_(std::move(hyperedges)), incident_(n) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw Error(ErrorCode::invalid_argument, "hyperedge " + std::to_string(i) + " has fewer than two vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw Error(ErrorCode::invalid_argument, "hyperedge " + std::to_string(i) + " repeats a vertex");
    if (e.back() >= n) throw Error(ErrorCode::invalid_argument, "hyperedge " + std::to_string(i) + " has a vertex >= n");
    for (Vertex v : e) incident_[v].push_back(i);
  }
}

void DegreeProfile::validate() const {
  if (sizes.empty()) throw Error(ErrorCode::invalid_argument, "degree profile needs r >= 1");
  for (auto s : sizes)
    if (s < 2) throw Error(ErrorCode::invalid_argument, "hyperedge sizes must be at least 2");
}

Partition Partition::balanced(unsigned r, unsigned l) {
  if (l > r) throw Error(ErrorCode::out_of_range, "partition level l must satisfy 0 <= l <= r");
  Partition p;
  for (unsigned i = 1; i <= l; ++i) p.parts.push_back((r + i - 1) / l);
  return p;
}

unsigned Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

ExtremeCounts extreme_counts(unsigned r, const Partition& p) {
  if (p.parts.empty()) return {0, static_cast<std::int64_t>(r - 1) * choose2(r)};
  ExtremeCounts c{0, 0};
  for (unsigned part : p.parts) {
    c.c3 += choose2(part);
    c.c4 += static_cast<std::int64_t>(part) * choose2(static_cast<std::int64_t>(part) - 1);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Berge girth

namespace {

// Girth of the incidence graph (vertex nodes 0..n-1, hyperedge nodes after),
// searching only for cycles shorter than `cap`. Returns cap if none.
std::size_t incidence_girth(const Hypergraph& h, std::size_t cap) {
  const std::size_t n = h.order();
  const std::size_t total = n + h.size();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(total, unset);
  std::vector<std::size_t> parent(total, unset);
  std::vector<std::size_t> touched;
  std::deque<std::size_t> queue;
  std::size_t best = cap;

  auto visit_neighbors = [&](std::size_t node, auto&& fn) {
    if (node < n) {
      for (std::size_t e : h.incident(static_cast<Vertex>(node))) fn(n + e);
    } else {
      for (Vertex v : h.hyperedges()[node - n]) fn(v);
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    for (auto t : touched) dist[t] = parent[t] = unset;
    touched.clear();
    queue.clear();
    dist[s] = 0;
    touched.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      visit_neighbors(u, [&](std::size_t w) {
        if (dist[w] == unset) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best;
}

}  // namespace

std::optional<std::size_t> berge_girth(const Hypergraph& h) {
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  const std::size_t g = incidence_girth(h, none);
  if (g == none) return std::nullopt;
  return g / 2;
}

bool berge_girth_at_least(const Hypergraph& h, std::size_t g) { return incidence_girth(h, 2 * g) >= 2 * g; }

// ---------------------------------------------------------------------------
// Construction

namespace {

bool profile_matches(const Hypergraph& h, const DegreeProfile& profile) {
  std::vector<std::size_t> want = profile.sizes;
  std::sort(want.begin(), want.end());
  std::vector<std::size_t> have;
  for (Vertex v = 0; v < h.order(); ++v) {
    have.clear();
    for (auto e : h.incident(v)) have.push_back(h.hyperedges()[e].size());
    std::sort(have.begin(), have.end());
    if (have != want) return false;
  }
  return true;
}

Hypergraph from_graph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(g.order(), std::move(edges));
}

std::size_t lcm_of(const std::vector<std::size_t>& sizes) {
  std::size_t l = 1;
  for (auto s : sizes) l = std::lcm(l, s);
  return l;
}

// Builds one hyperedge class at a time. Within a class the vertex set is
// split into blocks; a block may only contain vertices that are pairwise at
// distance >= 4 in the clique expansion built so far, which keeps every
// Berge cycle at length >= 5. When no admissible block exists among the
// unplaced vertices, a random block of the current class is dissolved and
// its vertices go back to the pool.
class GreedyBuilder {
public:
  GreedyBuilder(std::size_t n, CounterRng& rng)
      : n_(n), rng_(rng), incident_(n), ball_stamp_(n, 0), forbid_stamp_(n, 0) {}

  bool place_class(std::size_t block_size) {
    std::vector<Vertex> pool(n_);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    std::vector<std::size_t> where(n_);
    std::iota(where.begin(), where.end(), std::size_t{0});
    std::vector<std::size_t> class_edges;
    std::size_t repairs = 0;
    const std::size_t repair_budget = 16 + 4 * n_ / block_size;

    auto take = [&](Vertex v) {
      const std::size_t i = where[v];
      const Vertex last = pool.back();
      pool[i] = last;
      where[last] = i;
      pool.pop_back();
    };
    auto give_back = [&](Vertex v) {
      where[v] = pool.size();
      pool.push_back(v);
    };

    std::vector<Vertex> block;
    while (!pool.empty()) {
      if (grow_block(pool, block_size, block)) {
        for (Vertex v : block) take(v);
        class_edges.push_back(add_edge(block));
        continue;
      }
      if (++repairs > repair_budget || class_edges.empty()) return false;
      const std::size_t pick = rng_.uniform(class_edges.size());
      const std::size_t e = class_edges[pick];
      class_edges[pick] = class_edges.back();
      class_edges.pop_back();
      for (Vertex v : edges_[e]) give_back(v);
      remove_edge(e);
    }
    return true;
  }

  Hypergraph finish() {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (alive_[e]) out.push_back(edges_[e]);
    return Hypergraph(n_, std::move(out));
  }

private:
  bool grow_block(const std::vector<Vertex>& pool, std::size_t block_size, std::vector<Vertex>& block) {
    block.clear();
    ++forbid_epoch_;
    const Vertex first = pool[rng_.uniform(pool.size())];
    block.push_back(first);
    forbid_ball(first);
    while (block.size() < block_size) {
      std::optional<Vertex> found;
      for (int tries = 0; tries < 32 && !found; ++tries) {
        const Vertex v = pool[rng_.uniform(pool.size())];
        if (forbid_stamp_[v] != forbid_epoch_) found = v;
      }
      if (!found) {
        const std::size_t start = rng_.uniform(pool.size());
        for (std::size_t k = 0; k < pool.size() && !found; ++k) {
          const Vertex v = pool[(start + k) % pool.size()];
          if (forbid_stamp_[v] != forbid_epoch_) found = v;
        }
      }
      if (!found) return false;
      block.push_back(*found);
      forbid_ball(*found);
    }
    return true;
  }

  // Marks every vertex within distance 3 of u in the current expansion.
  void forbid_ball(Vertex u) {
    ++ball_epoch_;
    frontier_.assign(1, u);
    ball_stamp_[u] = ball_epoch_;
    forbid_stamp_[u] = forbid_epoch_;
    for (int depth = 0; depth < 3; ++depth) {
      next_.clear();
      for (Vertex w : frontier_)
        for (std::size_t e : incident_[w])
          for (Vertex z : edges_[e])
            if (ball_stamp_[z] != ball_epoch_) {
              ball_stamp_[z] = ball_epoch_;
              forbid_stamp_[z] = forbid_epoch_;
              next_.push_back(z);
            }
      frontier_.swap(next_);
    }
  }

  std::size_t add_edge(const std::vector<Vertex>& block) {
    const std::size_t id = edges_.size();
    edges_.push_back(block);
    alive_.push_back(true);
    for (Vertex v : block) incident_[v].push_back(id);
    return id;
  }

  void remove_edge(std::size_t id) {
    alive_[id] = false;
    for (Vertex v : edges_[id]) {
      auto& inc = incident_[v];
      inc.erase(std::find(inc.begin(), inc.end(), id));
    }
  }

  std::size_t n_;
  CounterRng& rng_;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<bool> alive_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::uint32_t> ball_stamp_;
  std::vector<std::uint32_t> forbid_stamp_;
  std::uint32_t ball_epoch_ = 0;
  std::uint32_t forbid_epoch_ = 0;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> next_;
};

struct Built {
  Hypergraph hypergraph;
  std::string backend;
};

Built build_girth5(const DegreeProfile& profile, std::uint64_t seed, std::size_t size_hint,
                   const ConstructOptions& options) {
  profile.validate();
  const std::size_t r = profile.r();
  const bool two_uniform = std::all_of(profile.sizes.begin(), profile.sizes.end(), [](auto s) { return s == 2; });

  if (options.allow_known_graphs && two_uniform) {
    std::optional<Graph> known;
    if (r == 2) known = cycle_graph(std::max<std::size_t>(5, size_hint));
    if (r == 3 && size_hint <= 10) known = petersen_graph();
    if (r == 4 && size_hint <= 19) known = robertson_graph();
    if (known) {
      Hypergraph h = from_graph(*known);
      if (berge_girth_at_least(h, 5) && profile_matches(h, profile)) return {std::move(h), "known-graph"};
    }
  }

  const std::size_t unit = lcm_of(profile.sizes);
  std::size_t n = std::max<std::size_t>(unit, (size_hint + unit - 1) / unit * unit);
  std::vector<std::size_t> order = profile.sizes;
  std::sort(order.begin(), order.end(), std::greater<>());

  for (std::size_t round = 0; n <= options.max_vertices; ++round, n *= 2) {
    for (std::size_t attempt = 0; attempt < options.attempts_per_size; ++attempt) {
      CounterRng rng(seed, (round << 32) | attempt);
      GreedyBuilder builder(n, rng);
      bool ok = true;
      for (auto s : order)
        if (!(ok = builder.place_class(s))) break;
      if (!ok) continue;
      Hypergraph h = builder.finish();
      if (berge_girth_at_least(h, 5) && profile_matches(h, profile)) return {std::move(h), "random-greedy"};
    }
  }
  throw Error(ErrorCode::construction_failed,
              "no girth-5 hypergraph found within " + std::to_string(options.max_vertices) + " vertices");
}

}  // namespace

Hypergraph construct_girth5_hypergraph(const DegreeProfile& profile, std::uint64_t seed, std::size_t size_hint,
                                       const ConstructOptions& options) {
  return build_girth5(profile, seed, size_hint, options).hypergraph;
}

Hypergraph construct_by_recursion(std::size_t girth, const DegreeProfile& profile, std::size_t max_vertices) {
  profile.validate();
  const auto& s = profile.sizes;
  if (s.size() == 1) {
    std::vector<Vertex> e(s[0]);
    std::iota(e.begin(), e.end(), Vertex{0});
    return Hypergraph(s[0], {e});
  }
  if (girth <= 2) {
    // No girth constraint: parallel partitions of a common vertex set.
    const std::size_t n = lcm_of(s);
    if (n > max_vertices) throw Error(ErrorCode::construction_failed, "recursive construction exceeds vertex budget");
    std::vector<std::vector<Vertex>> edges;
    for (auto size : s)
      for (std::size_t start = 0; start < n; start += size) {
        std::vector<Vertex> e(size);
        std::iota(e.begin(), e.end(), static_cast<Vertex>(start));
        edges.push_back(std::move(e));
      }
    return Hypergraph(n, std::move(edges));
  }

  // H0 handles the first r-1 sizes at full girth; G is |H0|-regular with
  // every hyperedge of the last size at girth - 1. Take |G| copies of H0
  // and, for each hyperedge of G, join one fresh vertex from each copy it
  // touches.
  const Hypergraph h0 = construct_by_recursion(girth, DegreeProfile{{s.begin(), s.end() - 1}}, max_vertices);
  const std::size_t m0 = h0.order();
  const Hypergraph g = construct_by_recursion(girth - 1, DegreeProfile{std::vector<std::size_t>(m0, s.back())}, max_vertices);
  const std::size_t copies = g.order();
  if (copies > max_vertices / m0) throw Error(ErrorCode::construction_failed, "recursive construction exceeds vertex budget");

  std::vector<std::vector<Vertex>> edges;
  for (std::size_t c = 0; c < copies; ++c)
    for (const auto& e : h0.hyperedges()) {
      std::vector<Vertex> shifted;
      for (Vertex v : e) shifted.push_back(static_cast<Vertex>(c * m0 + v));
      edges.push_back(std::move(shifted));
    }
  std::vector<std::size_t> next_free(copies, 0);
  for (const auto& e : g.hyperedges()) {
    std::vector<Vertex> joined;
    for (Vertex c : e) joined.push_back(static_cast<Vertex>(c * m0 + next_free[c]++));
    edges.push_back(std::move(joined));
  }
  return Hypergraph(copies * m0, std::move(edges));
}

Graph clique_expansion(const Hypergraph& h) {
  std::vector<Edge> edges;
  for (const auto& e : h.hyperedges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) edges.emplace_back(e[i], e[j]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(h.order(), edges);
}

// ---------------------------------------------------------------------------
// Extreme graphs

ExtremeGraph extreme_graph(unsigned r, const Partition& partition, std::uint64_t seed) {
  if (r < 3) throw Error(ErrorCode::invalid_argument, "extreme graphs need r >= 3");
  if (partition.parts.empty()) return {complete_bipartite(r, r), std::nullopt, "complete-bipartite"};
  for (unsigned part : partition.parts)
    if (part == 0) throw Error(ErrorCode::invalid_argument, "partition parts must be positive");
  if (partition.total() != r)
    throw Error(ErrorCode::invalid_argument, "partition " + partition.to_string() + " does not sum to r = " + std::to_string(r));

  if (partition.parts.size() == 1) {
    std::vector<Vertex> all(r + 1);
    std::iota(all.begin(), all.end(), Vertex{0});
    Hypergraph h(r + 1, {all});
    return {complete_graph(r + 1), std::move(h), "complete"};
  }

  DegreeProfile profile;
  std::size_t largest = 0;
  for (unsigned part : partition.parts) {
    profile.sizes.push_back(part + 1);
    largest = std::max<std::size_t>(largest, part + 1);
  }
  Built built = build_girth5(profile, seed, largest + 1, {});
  Graph g = clique_expansion(built.hypergraph);
  return {std::move(g), std::move(built.hypergraph), built.backend};
}

ExtremeGraph extreme_graph_level(unsigned r, unsigned l, std::uint64_t seed) {
  if (r < 3) throw Error(ErrorCode::invalid_argument, "extreme graphs need r >= 3");
  return extreme_graph(r, Partition::balanced(r, l), seed);
}

bool ExtremeReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

ExtremeReport verify_extreme(const Graph& g, unsigned r, const Partition& partition, const Hypergraph* source) {
  ExtremeReport report;
  const auto n = static_cast<Vertex>(g.order());
  auto vertex_detail = [](Vertex x, const std::string& what) { return "vertex " + std::to_string(x) + ": " + what; };

  Check regular{"regular", n > 0, n > 0 ? "" : "empty graph"};
  for (Vertex x = 0; x < n && regular.passed; ++x)
    if (g.degree(x) != r) {
      regular.passed = false;
      regular.detail = vertex_detail(x, "degree " + std::to_string(g.degree(x)));
    }
  report.checks.push_back(regular);

  std::vector<unsigned> expected = partition.parts;
  if (expected.empty()) expected.assign(r, 1);
  std::sort(expected.begin(), expected.end());
  Check cliques{"neighborhood-cliques", true, ""};
  for (Vertex x = 0; x < n && cliques.passed; ++x) {
    const Graph h = neighborhood_graph(g, x);
    std::vector<Vertex> comp(h.order());
    std::iota(comp.begin(), comp.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (comp[v] != v) v = comp[v] = comp[comp[v]];
      return v;
    };
    for (auto [a, b] : h.edges()) comp[find(a)] = find(b);
    std::vector<std::size_t> members(h.order(), 0);
    std::vector<std::size_t> edge_count(h.order(), 0);
    for (Vertex v = 0; v < h.order(); ++v) ++members[find(v)];
    for (auto [a, b] : h.edges()) ++edge_count[find(a)];
    std::vector<unsigned> sizes;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (members[v] == 0) continue;
      if (edge_count[v] != static_cast<std::size_t>(choose2(static_cast<std::int64_t>(members[v])))) {
        cliques.passed = false;
        cliques.detail = vertex_detail(x, "neighborhood component is not a clique");
      }
      sizes.push_back(static_cast<unsigned>(members[v]));
    }
    std::sort(sizes.begin(), sizes.end());
    if (cliques.passed && sizes != expected) {
      cliques.passed = false;
      cliques.detail = vertex_detail(x, "neighborhood clique sizes differ from " + partition.to_string());
    }
  }
  report.checks.push_back(cliques);

  if (!partition.parts.empty()) {
    Check cherries{"no-type2-cherries", true, ""};
    for (Vertex x = 0; x < n && cherries.passed; ++x)
      if (auto c = type2_cherries(g, x); c != 0) {
        cherries.passed = false;
        cherries.detail = vertex_detail(x, std::to_string(c) + " type-2 cherries");
      }
    report.checks.push_back(cherries);
  }

  const ExtremeCounts want = extreme_counts(r, partition);
  Check counts{"closed-form-counts", true, ""};
  for (Vertex x = 0; x < n && counts.passed; ++x) {
    const auto p = local_profile(g, x);
    if (p.c3 != want.c3 || p.c4 != want.c4) {
      counts.passed = false;
      counts.detail = vertex_detail(x, "(c3, c4) = (" + std::to_string(p.c3) + ", " + std::to_string(p.c4) + "), expected (" +
                                           std::to_string(want.c3) + ", " + std::to_string(want.c4) + ")");
    }
  }
  report.checks.push_back(counts);

  if (source != nullptr) {
    const bool girth_ok = berge_girth_at_least(*source, 5);
    report.checks.push_back({"berge-girth-5", girth_ok, girth_ok ? "" : "source hypergraph has a Berge cycle shorter than 5"});
    const bool same = source->order() == g.order() && clique_expansion(*source) == g;
    report.checks.push_back({"source-expansion", same, same ? "" : "graph is not the clique expansion of its source"});
  }
  return report;
}

// ---------------------------------------------------------------------------

Hypergraph hypergraph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::parse_error, std::string("hypergraph JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("hyperedges") || !doc["n"].is_number_unsigned() ||
      !doc["hyperedges"].is_array())
    throw Error(ErrorCode::parse_error, "hypergraph JSON must be {\"n\": N, \"hyperedges\": [[...], ...]}");
  std::vector<std::vector<Vertex>> edges;
  for (const auto& je : doc["hyperedges"]) {
    if (!je.is_array()) throw Error(ErrorCode::parse_error, "hypergraph JSON: hyperedge must be an array");
    std::vector<Vertex> e;
    for (const auto& v : je) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffu)
        throw Error(ErrorCode::parse_error, "hypergraph JSON: vertex ids must be non-negative integers");
      e.push_back(v.get<Vertex>());
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(doc["n"].get<std::size_t>(), std::move(edges));
}

std::string hypergraph_to_json(const Hypergraph& h) {
  std::string out = "{\"n\": " + std::to_string(h.order()) + ", \"hyperedges\": [";
  for (std::size_t i = 0; i < h.size(); ++i) {
    out += i ? ", [" : "[";
    const auto& e = h.hyperedges()[i];
    for (std::size_t j = 0; j < e.size(); ++j) out += (j ? ", " : "") + std::to_string(e[j]);
    out += "]";
  }
  return out + "]}";
}

}  // namespace trisq
