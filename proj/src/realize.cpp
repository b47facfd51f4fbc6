#include "trisq/realize.hpp"

#include "json_util.hpp"
#include "trisq/error.hpp"
#include "trisq/polytope.hpp"

#include <limits>

namespace trisq {

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt to_big(std::size_t v) { return BigInt(std::to_string(v)); }

std::size_t to_size(const BigInt& z) {
  if (z < 0 || z > BigInt(std::to_string(std::numeric_limits<std::size_t>::max())))
    throw Error(ErrorCode::invalid_argument, "count too large: " + z.get_str());
  return std::stoull(z.get_str());
}

}  // namespace

Graph combine_pair(const Rat& q, const Graph& g1, const Graph& g2) {
  if (q <= 0 || q >= 1) throw Error(ErrorCode::invalid_argument, "q must lie strictly between 0 and 1");
  const auto r1 = g1.regular_degree();
  const auto r2 = g2.regular_degree();
  if (!r1 || !r2) throw Error(ErrorCode::not_regular, "combine_pair needs regular graphs");
  if (*r1 != *r2)
    throw Error(ErrorCode::degree_mismatch, "degrees differ: " + std::to_string(*r1) + " vs " + std::to_string(*r2));
  const BigInt a = q.get_num();
  const BigInt b = q.get_den();
  const GraphCopies parts[] = {{&g1, to_size(a * to_big(g2.order()))}, {&g2, to_size((b - a) * to_big(g1.order()))}};
  return disjoint_union(parts);
}

std::shared_ptr<const ExtremeGraph> ComponentCache::get(unsigned r, unsigned l, std::uint64_t seed) {
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(r, l, seed);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  auto built = std::make_shared<const ExtremeGraph>(extreme_graph_level(r, l, seed));
  cache_.emplace(key, built);
  return built;
}

Graph Blueprint::build(std::size_t max_order) const {
  if (total_order > to_big(max_order))
    throw Error(ErrorCode::invalid_argument, "realized graph has " + total_order.get_str() + " vertices, above the limit of " +
                                                 std::to_string(max_order));
  std::vector<GraphCopies> parts;
  for (const auto& c : components) parts.push_back({&c.generator->graph, to_size(c.copies)});
  return disjoint_union(parts);
}

Blueprint realize(unsigned r, const QPoint& target, std::uint64_t seed, ComponentCache* cache) {
  if (r < 3) throw Error(ErrorCode::invalid_argument, "realization needs r >= 3");
  const Polygon poly = polygon_qr(r);
  if (locate(poly, target) == Location::outside)
    throw Error(ErrorCode::outside_region, "point " + to_string(target) + " lies outside Q^" + std::to_string(r));

  std::vector<unsigned> level_of;
  for (const auto& v : poly.vertices)
    for (unsigned l = 0; l <= r; ++l)
      if (extreme_point(r, l) == v) {
        level_of.push_back(l);
        break;
      }
  if (level_of.size() != poly.vertices.size()) throw std::logic_error("polygon vertex is not an extreme point");

  // Fan from vertices[0] = (0, 0); triangles (0, i, i + 1).
  const auto& v = poly.vertices;
  std::size_t tri = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (sgn(cross(v[0], v[i], target)) >= 0 && sgn(cross(v[i], v[i + 1], target)) >= 0 &&
        sgn(cross(v[i + 1], v[0], target)) >= 0) {
      tri = i;
      break;
    }
  if (tri == 0) throw std::logic_error("no fan triangle contains a point of the polygon");

  const std::size_t idx[3] = {0, tri, tri + 1};
  const Rat area = cross(v[0], v[tri], v[tri + 1]);
  const Rat weights[3] = {Rat(cross(target, v[tri], v[tri + 1]) / area), Rat(cross(v[0], target, v[tri + 1]) / area),
                          Rat(cross(v[0], v[tri], target) / area)};

  ComponentCache local;
  ComponentCache& components = cache ? *cache : local;

  Blueprint bp;
  bp.r = r;
  bp.target = target;
  BigInt n = 1;
  BigInt weight_dens = 1;
  BigInt orders = 1;
  for (int k = 0; k < 3; ++k) {
    if (weights[k] == 0) continue;
    BlueprintComponent c;
    c.level = level_of[idx[k]];
    c.generator = components.get(r, c.level, seed);
    c.point = v[idx[k]];
    c.weight = weights[k];
    const BigInt order = to_big(c.generator->graph.order());
    const Rat per_vertex(c.weight / Rat(order));
    n = lcm(n, per_vertex.get_den());
    weight_dens = lcm(weight_dens, c.weight.get_den());
    orders = lcm(orders, order);
    bp.components.push_back(std::move(c));
  }
  Rat x = 0;
  Rat y = 0;
  for (auto& c : bp.components) {
    const Rat copies(c.weight * Rat(n) / Rat(to_big(c.generator->graph.order())));
    if (copies.get_den() != 1) throw std::logic_error("non-integral copy count");
    c.copies = copies.get_num();
    x += c.weight * c.point.x;
    y += c.weight * c.point.y;
  }
  if (QPoint{x, y} != target) throw std::logic_error("barycentric weights do not reproduce the target");
  if (n > weight_dens * orders) throw std::logic_error("blueprint order exceeds its documented bound");
  bp.total_order = n;
  return bp;
}

QPoint blueprint_point(const Blueprint& bp) {
  BigInt triangles = 0;
  BigInt squares = 0;
  BigInt n = 0;
  for (const auto& c : bp.components) {
    const auto totals = cycle_totals(c.generator->graph);
    triangles += c.copies * totals.triangles;
    squares += c.copies * totals.squares;
    n += c.copies * to_big(c.generator->graph.order());
  }
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty blueprint");
  return {make_rat(triangles, n), make_rat(squares, n)};
}

std::string blueprint_to_json(const Blueprint& bp) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : bp.components) {
    comps.push_back({{"level", c.level},
                     {"backend", c.generator->backend},
                     {"generator_order", c.generator->graph.order()},
                     {"point", detail::to_json(c.point)},
                     {"weight", detail::to_json(c.weight)},
                     {"copies", c.copies.get_str()}});
  }
  nlohmann::json doc = {{"r", bp.r}, {"target", detail::to_json(bp.target)}, {"components", comps}, {"N", bp.total_order.get_str()}};
  return doc.dump(2);
}

}  // namespace trisq
