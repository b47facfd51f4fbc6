#pragma once

// Slow reference computations used only by the tests. They go through
// has_edge() and nothing else from the counting code.

#include "trisq/graph.hpp"
#include "trisq/hypergraph.hpp"
#include "trisq/polytope.hpp"
#include "trisq/random.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using trisq::Graph;
using trisq::Vertex;

struct VertexCounts {
  std::int64_t c3 = 0;
  std::int64_t c4 = 0;
  std::int64_t ct = 0;
  std::array<std::int64_t, 4> types{};
};

// Walk every 4-cycle x-a-b-c-x in both directions and halve. Diagonals are
// xb and ac.
inline VertexCounts vertex_counts(const Graph& g, Vertex x) {
  VertexCounts out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (a != x && b != x && g.has_edge(x, a) && g.has_edge(x, b) && g.has_edge(a, b)) ++out.c3;
  std::array<std::int64_t, 4> directed{};
  for (Vertex a = 0; a < n; ++a) {
    if (a == x || !g.has_edge(x, a)) continue;
    for (Vertex b = 0; b < n; ++b) {
      if (b == x || b == a || !g.has_edge(a, b)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (c == x || c == a || c == b || !g.has_edge(b, c) || !g.has_edge(c, x)) continue;
        const bool xb = g.has_edge(x, b);
        const bool ac = g.has_edge(a, c);
        ++directed[xb && ac ? 0 : xb ? 1 : ac ? 2 : 3];
      }
    }
  }
  for (int t = 0; t < 4; ++t) out.types[t] = directed[t] / 2;
  out.c4 = out.types[0] + out.types[1] + out.types[2] + out.types[3];
  // Both diagonals weigh 1 at every vertex; a single diagonal weighs 2 at
  // its own endpoints and 0 at the other two.
  out.ct = out.types[0] + 2 * out.types[1];
  return out;
}

inline std::int64_t total_triangles(const Graph& g) {
  std::int64_t t = 0;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++t;
  return t;
}

// Each 4-cycle on {a,b,c,d} is one of three pairings.
inline std::int64_t total_squares(const Graph& g) {
  std::int64_t t = 0;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          auto cyc = [&](Vertex p, Vertex q, Vertex r, Vertex s) {
            return g.has_edge(p, q) && g.has_edge(q, r) && g.has_edge(r, s) && g.has_edge(s, p);
          };
          t += cyc(a, b, c, d) + cyc(a, b, d, c) + cyc(a, c, b, d);
        }
  return t;
}

// Erdos-Renyi graph for property tests.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  trisq::CounterRng rng(seed, 0);
  std::vector<trisq::Edge> edges;
  const auto threshold = static_cast<std::uint64_t>(p * 1e6);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (rng.uniform(1000000) < threshold) edges.emplace_back(a, b);
  return Graph(n, edges);
}

// Largest sum of C(|S_b|, 2) over outer vertices b, where neighbor i of x
// sends o_i = r - 1 - d_i edges out of the closed neighborhood and no outer
// vertex takes more than r of them, plus the paths of length two inside the
// neighborhood. Exhaustive over assignments with outer labels introduced in
// order.
inline std::int64_t max_c4_by_assignment(std::size_t r, const std::vector<std::int64_t>& degrees) {
  std::vector<std::int64_t> out_deg;
  std::int64_t inside = 0;
  for (auto d : degrees) {
    out_deg.push_back(static_cast<std::int64_t>(r) - 1 - d);
    inside += d * (d - 1) / 2;
  }
  const auto slots = static_cast<std::size_t>(std::accumulate(out_deg.begin(), out_deg.end(), std::int64_t{0}));
  std::vector<std::int64_t> load(slots + 1, 0);
  std::int64_t best = 0;
  std::function<void(std::size_t, std::size_t, std::int64_t, std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t from, std::int64_t left, std::size_t used, std::size_t cur_used) {
        if (i == out_deg.size()) {
          std::int64_t s = 0;
          for (std::size_t b = 0; b < used; ++b) s += load[b] * (load[b] - 1) / 2;
          best = std::max(best, s);
          return;
        }
        if (left == 0) {
          if (i + 1 < out_deg.size())
            go(i + 1, 0, out_deg[i + 1], cur_used, cur_used);
          else
            go(i + 1, 0, 0, cur_used, cur_used);
          return;
        }
        // Any existing label at position >= from, or one fresh label.
        for (std::size_t b = from; b <= cur_used && b < slots; ++b) {
          if (load[b] >= static_cast<std::int64_t>(r)) continue;
          ++load[b];
          go(i, b + 1, left - 1, used, std::max(cur_used, b + 1));
          --load[b];
        }
      };
  if (!out_deg.empty()) go(0, 0, out_deg[0], 0, 0);
  return inside + best;
}

// Shortest Berge cycle by depth-first search over alternating sequences
// v0 e0 v1 e1 ... v_{k-1} e_{k-1} v0 with distinct vertices and edges.
inline std::size_t berge_girth(const trisq::Hypergraph& h, std::size_t limit) {
  const auto& edges = h.hyperedges();
  std::size_t best = 0;
  std::vector<bool> vused(h.order(), false), eused(edges.size(), false);
  std::function<void(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex v, std::size_t len) {
    if (best && len >= best) return;
    if (len >= limit) return;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (eused[e] || !std::binary_search(edges[e].begin(), edges[e].end(), v)) continue;
      eused[e] = true;
      for (Vertex w : edges[e]) {
        if (w == v) continue;
        if (w == start && len + 1 >= 2) {
          if (!best || len + 1 < best) best = len + 1;
          continue;
        }
        if (vused[w] || w < start) continue;
        vused[w] = true;
        dfs(start, w, len + 1);
        vused[w] = false;
      }
      eused[e] = false;
    }
  };
  for (Vertex s = 0; s < h.order(); ++s) {
    vused[s] = true;
    dfs(s, s, 0);
    vused[s] = false;
  }
  return best;
}

// Distinct simple r-regular edge sets on n labeled vertices reached by
// perfect matchings of the n*r half-edges.
inline std::size_t pairing_model_count(unsigned r, unsigned n) {
  const unsigned points = n * r;
  std::set<std::vector<std::pair<unsigned, unsigned>>> seen;
  std::vector<int> mate(points, -1);
  std::vector<int> paired(n * n, 0);
  std::function<void()> rec = [&] {
    unsigned i = 0;
    while (i < points && mate[i] >= 0) ++i;
    if (i == points) {
      std::vector<std::pair<unsigned, unsigned>> edges;
      for (unsigned p = 0; p < points; ++p) {
        const auto q = static_cast<unsigned>(mate[p]);
        if (p < q) {
          const unsigned a = p / r, b = q / r;
          edges.emplace_back(std::min(a, b), std::max(a, b));
        }
      }
      std::sort(edges.begin(), edges.end());
      seen.insert(edges);
      return;
    }
    for (unsigned j = i + 1; j < points; ++j) {
      const unsigned a = i / r, b = j / r;
      // loops and repeated pairs never give a simple graph
      if (mate[j] >= 0 || a == b || paired[a * n + b]) continue;
      mate[i] = static_cast<int>(j);
      mate[j] = static_cast<int>(i);
      paired[a * n + b] = paired[b * n + a] = 1;
      rec();
      paired[a * n + b] = paired[b * n + a] = 0;
      mate[i] = mate[j] = -1;
    }
  };
  rec();
  return seen.size();
}

// Edge subsets of K_n with every degree equal to r, by Gray code over all
// 2^C(n,2) subsets.
inline std::uint64_t subset_count(unsigned r, unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<int> deg(n, 0);
  unsigned at_r = 0;
  auto bump = [&](unsigned v, int delta) {
    if (deg[v] == static_cast<int>(r)) --at_r;
    deg[v] += delta;
    if (deg[v] == static_cast<int>(r)) ++at_r;
  };
  std::uint64_t count = (r == 0) ? 1 : 0;
  if (r == 0) at_r = n;
  std::uint64_t gray = 0;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto bit = static_cast<unsigned>(__builtin_ctzll(i));
    gray ^= std::uint64_t{1} << bit;
    const int delta = (gray >> bit) & 1u ? 1 : -1;
    bump(slots[bit].first, delta);
    bump(slots[bit].second, delta);
    if (at_r == n) ++count;
  }
  return count;
}

// Points that are not on a closed segment or in a closed triangle spanned by
// the others. Quartic, fine for a few dozen points.
inline std::size_t strict_hull_vertices(const std::vector<trisq::QPoint>& pts) {
  using trisq::Rat;
  auto cross = [](const trisq::QPoint& a, const trisq::QPoint& b, const trisq::QPoint& c) {
    return sgn(Rat((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)));
  };
  auto on_segment = [&](const trisq::QPoint& a, const trisq::QPoint& b, const trisq::QPoint& p) {
    return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
  };
  const std::size_t n = pts.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool covered = false;
    for (std::size_t a = 0; a < n && !covered; ++a)
      for (std::size_t b = a + 1; b < n && !covered; ++b) {
        if (a == i || b == i) continue;
        if (on_segment(pts[a], pts[b], pts[i])) covered = true;
        for (std::size_t c = b + 1; c < n && !covered; ++c) {
          if (c == i) continue;
          const int s1 = cross(pts[a], pts[b], pts[i]), s2 = cross(pts[b], pts[c], pts[i]), s3 = cross(pts[c], pts[a], pts[i]);
          if (cross(pts[a], pts[b], pts[c]) != 0 && ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)))
            covered = true;
        }
      }
    count += !covered;
  }
  return count;
}

inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!g.has_edge(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<trisq::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  return Graph(g.order(), edges);
}

// trace(A^k) from dense integer matrix powers.
inline std::vector<trisq::BigInt> walk_traces(const Graph& g, unsigned max_k) {
  const std::size_t n = g.order();
  std::vector<trisq::BigInt> a(n * n, 0), p(n * n, 0), next(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    p[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j))) a[i * n + j] = 1;
  }
  std::vector<trisq::BigInt> traces;
  for (unsigned k = 0; k <= max_k; ++k) {
    trisq::BigInt t = 0;
    for (std::size_t i = 0; i < n; ++i) t += p[i * n + i];
    traces.push_back(t);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        trisq::BigInt s = 0;
        for (std::size_t m = 0; m < n; ++m)
          if (a[m * n + j] != 0) s += p[i * n + m];
        next[i * n + j] = s;
      }
    std::swap(p, next);
  }
  return traces;
}

}  // namespace oracle
