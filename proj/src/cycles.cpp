#include "trisq/error.hpp"
#include "trisq/graph.hpp"

#include <algorithm>
#include <functional>

namespace trisq {

namespace {

void check_vertex(const Graph& g, Vertex x) {
  if (x >= g.order())
    throw Error(ErrorCode::out_of_range, "vertex " + std::to_string(x) + " out of range for graph of order " + std::to_string(g.order()));
}

}  // namespace

LocalProfile local_profile(const Graph& g, Vertex x, bool require_regular) {
  check_vertex(g, x);
  if (require_regular && !g.regular_degree())
    throw Error(ErrorCode::not_regular, "graph is not regular");

  const auto nb = g.neighbors(x);
  const std::size_t r = nb.size();
  auto in_nbhd = [&](Vertex v) { return v != x && g.has_edge(x, v); };

  // Neighborhood graph as a dense r x r matrix.
  std::vector<std::uint8_t> adj(r * r, 0);
  LocalProfile p;
  p.nbhd_degrees.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (g.has_edge(nb[i], nb[j])) {
        adj[i * r + j] = adj[j * r + i] = 1;
        ++p.nbhd_degrees[i];
        ++p.nbhd_degrees[j];
        ++p.c3;
      }

  // Four-cycles x-a-b-c-x: one per unordered {a, c} in N(x) and common
  // neighbor b of a and c other than x.
  for (std::size_t i = 0; i < r; ++i) {
    const auto na = g.neighbors(nb[i]);
    for (std::size_t j = i + 1; j < r; ++j) {
      const auto nc = g.neighbors(nb[j]);
      const bool ac = adj[i * r + j] != 0;
      std::size_t ia = 0;
      std::size_t ic = 0;
      while (ia < na.size() && ic < nc.size()) {
        if (na[ia] < nc[ic]) {
          ++ia;
        } else if (nc[ic] < na[ia]) {
          ++ic;
        } else {
          const Vertex b = na[ia];
          if (b != x) {
            const bool xb = in_nbhd(b);
            ++p.types[xb ? (ac ? 0 : 1) : (ac ? 2 : 3)];
          }
          ++ia;
          ++ic;
        }
      }
    }
  }
  p.c4 = p.types[0] + p.types[1] + p.types[2] + p.types[3];

  // ct = 3 n3(G^x) + 2 n2(G^x), from the neighborhood graph alone.
  std::int64_t triangles = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!adj[i * r + j]) continue;
      for (std::size_t k = j + 1; k < r; ++k)
        if (adj[i * r + k] && adj[j * r + k]) ++triangles;
    }
  std::int64_t cherries = 0;
  for (auto d : p.nbhd_degrees) cherries += choose2(d);
  const std::int64_t open_triples = cherries - 3 * triangles;
  p.ct = 3 * triangles + 2 * open_triples;

  std::sort(p.nbhd_degrees.begin(), p.nbhd_degrees.end(), std::greater<>());
  return p;
}

CycleTotals cycle_totals(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  BigInt sum3 = 0;
  BigInt sum4 = 0;
  for (Vertex x = 0; x < n; ++x) {
    const auto p = local_profile(g, x);
    sum3 += static_cast<long>(p.c3);
    sum4 += static_cast<long>(p.c4);
  }

  // Direct counts: triangles u < v < w; each four-cycle has two diagonal
  // pairs {u, w}, and C(codeg(u, w), 2) counts the cycles on that pair.
  BigInt direct3 = 0;
  BigInt direct4x2 = 0;
  std::vector<std::uint32_t> codeg(n, 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] < u) continue;
      for (std::size_t j = i + 1; j < nu.size(); ++j)
        if (g.has_edge(nu[i], nu[j])) direct3 += 1;
    }
    for (Vertex v : nu)
      for (Vertex w : g.neighbors(v))
        if (w > u) {
          if (codeg[w]++ == 0) touched.push_back(w);
        }
    for (Vertex w : touched) {
      direct4x2 += static_cast<long>(choose2(codeg[w]));
      codeg[w] = 0;
    }
    touched.clear();
  }

  if (sum3 != 3 * direct3 || sum4 != 2 * direct4x2)
    throw std::logic_error("cycle_totals: per-vertex sums disagree with direct counts");
  return {direct3, BigInt(direct4x2 / 2)};
}

QPoint cycle_point(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::invalid_argument, "cycle_point needs at least one vertex");
  if (!g.regular_degree()) throw Error(ErrorCode::not_regular, "cycle_point requires a regular graph");
  const auto totals = cycle_totals(g);
  const BigInt n(std::to_string(g.order()));
  return {make_rat(totals.triangles, n), make_rat(totals.squares, n)};
}

TripleProfile triple_profile(const Graph& h) {
  TripleProfile t;
  t.edges = static_cast<std::int64_t>(h.size());
  const auto v = static_cast<Vertex>(h.order());
  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a + 1; b < v; ++b) {
      const int ab = h.has_edge(a, b) ? 1 : 0;
      for (Vertex c = b + 1; c < v; ++c) ++t.n[ab + (h.has_edge(a, c) ? 1 : 0) + (h.has_edge(b, c) ? 1 : 0)];
    }
  return t;
}

Graph neighborhood_graph(const Graph& g, Vertex x) {
  check_vertex(g, x);
  return induced_subgraph(g, g.neighbors(x));
}

std::int64_t type2_cherries(const Graph& g, Vertex x) {
  check_vertex(g, x);
  const auto nb = g.neighbors(x);
  std::vector<Vertex> outside;
  for (Vertex a : nb)
    for (Vertex w : g.neighbors(a))
      if (w != x && !g.has_edge(x, w)) outside.push_back(w);
  std::sort(outside.begin(), outside.end());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < outside.size();) {
    std::size_t j = i;
    while (j < outside.size() && outside[j] == outside[i]) ++j;
    total += choose2(static_cast<std::int64_t>(j - i));
    i = j;
  }
  return total;
}

std::int64_t max_c4_given_degrees(std::size_t r, std::span<const std::int64_t> degrees) {
  if (degrees.size() != r)
    throw Error(ErrorCode::invalid_argument, "degree sequence must have length r = " + std::to_string(r));
  for (std::size_t i = 0; i < r; ++i) {
    if (degrees[i] < 0 || degrees[i] > static_cast<std::int64_t>(r) - 1)
      throw Error(ErrorCode::invalid_argument, "degree " + std::to_string(degrees[i]) + " outside [0, r-1]");
    if (i > 0 && degrees[i] > degrees[i - 1]) throw Error(ErrorCode::invalid_argument, "degree sequence must be non-increasing");
  }
  std::int64_t total = 0;
  for (auto d : degrees) total += choose2(d);
  // e_j = #{i : d_i < r - j}; outside vertex j sees exactly those neighbors.
  for (std::size_t j = 1; j < r; ++j) {
    std::int64_t e = 0;
    for (auto d : degrees)
      if (d < static_cast<std::int64_t>(r - j)) ++e;
    total += choose2(e);
  }
  return total;
}

}  // namespace trisq
