#include "trisq/graph.hpp"

#include "trisq/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace trisq {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {
  if (n <= 64) rows_.assign(n, 0);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : offsets_(n + 1, 0) {
  if (n > 0xffffffffu) throw Error(ErrorCode::invalid_argument, "graph too large");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::invalid_argument, "edge " + edge_str(u, v) + " has an endpoint >= n = " + std::to_string(n));
    if (u == v) throw Error(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(u));
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last)
      throw Error(ErrorCode::invalid_argument, "duplicate edge " + edge_str(static_cast<Vertex>(i), *dup));
  }
  if (n <= 64) {
    rows_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (Vertex w : neighbors(static_cast<Vertex>(i))) rows_[i] |= std::uint64_t{1} << w;
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!rows_.empty() || order() == 0) return u < rows_.size() && ((rows_[u] >> v) & 1u);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (order() == 0) return std::nullopt;
  std::size_t d = degree(0);
  for (Vertex v = 1; v < order(); ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

Graph complete_graph(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) e.emplace_back(u, v);
  return Graph(k, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph(a + b, e);
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::invalid_argument, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < m; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % m));
  return Graph(m, e);
}

Graph path_graph(std::size_t m) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  return Graph(m, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, e);
}

Graph robertson_graph() {
  // Hamiltonian cycle plus one chord per vertex: the unique (4,5)-cage.
  static constexpr int chord[19] = {8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};
  std::vector<Edge> e;
  for (Vertex i = 0; i < 19; ++i) {
    e.emplace_back(i, (i + 1) % 19);
    e.emplace_back(i, static_cast<Vertex>((i + chord[i]) % 19));
  }
  return Graph(19, e);
}

Graph prism_graph() {
  std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, e);
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw Error(ErrorCode::out_of_range, "vertex " + std::to_string(vertices[i]) + " out of range");
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(vertices.size(), e);
}

Graph disjoint_union(std::span<const GraphCopies> parts) {
  std::size_t n = 0;
  std::size_t m = 0;
  for (const auto& p : parts) {
    n += p.graph->order() * p.copies;
    m += p.graph->size() * p.copies;
  }
  std::vector<Edge> e;
  e.reserve(m);
  std::size_t base = 0;
  for (const auto& p : parts) {
    const auto edges = p.graph->edges();
    for (std::size_t c = 0; c < p.copies; ++c) {
      for (auto [u, v] : edges) e.emplace_back(static_cast<Vertex>(base + u), static_cast<Vertex>(base + v));
      base += p.graph->order();
    }
  }
  return Graph(n, e);
}

// ---------------------------------------------------------------------------
// File formats

Graph graph_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::parse_error, std::string("graph JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw Error(ErrorCode::parse_error, "graph JSON must be an object with \"n\" and \"edges\"");
  const auto& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 0) throw Error(ErrorCode::parse_error, "graph JSON: \"n\" must be a non-negative integer");
  const auto& je = doc["edges"];
  if (!je.is_array()) throw Error(ErrorCode::parse_error, "graph JSON: \"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(je.size());
  for (const auto& pair : je) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned())
      throw Error(ErrorCode::parse_error, "graph JSON: each edge must be a pair of non-negative integers");
    auto u = pair[0].get<std::uint64_t>();
    auto v = pair[1].get<std::uint64_t>();
    if (u > 0xffffffffu || v > 0xffffffffu) throw Error(ErrorCode::parse_error, "graph JSON: vertex id too large");
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
  }
  return Graph(jn.get<std::size_t>(), edges);
}

std::string graph_to_json(const Graph& g) {
  std::string out = "{\"n\": " + std::to_string(g.order()) + ", \"edges\": [";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ", ";
    first = false;
    out += "[" + std::to_string(u) + ", " + std::to_string(v) + "]";
  }
  out += "]}";
  return out;
}

Graph graph_from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::size_t n = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      std::size_t value = 0;
      std::istringstream hs(line.substr(line.find('#') + 1));
      if (hs >> key && key == "n" && hs >> value) declared = value;
      continue;
    }
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::istringstream ps(line);
    std::string rest;
    if (!(ps >> u >> v) || u < 0 || v < 0 || (ps >> rest && rest[0] != '#'))
      throw Error(ErrorCode::parse_error, "edge list line " + std::to_string(lineno) + ": expected 'u v'");
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (declared) {
    if (*declared < n) throw Error(ErrorCode::parse_error, "edge list: declared n is smaller than the largest vertex id");
    n = *declared;
  }
  return Graph(n, edges);
}

Graph graph_from_text(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? graph_from_json(text) : graph_from_edge_list(text);
  }
  return graph_from_edge_list(text);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_text(buf.str());
}

}  // namespace trisq
