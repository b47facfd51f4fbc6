#include "trisq/polytope.hpp"

#include "trisq/error.hpp"
#include "trisq/hypergraph.hpp"

#include <algorithm>

namespace trisq {

const char* to_string(Location loc) noexcept {
  switch (loc) {
    case Location::interior: return "interior";
    case Location::boundary: return "boundary";
    case Location::outside: return "outside";
  }
  return "?";
}

const char* to_string(LimitLocation loc) noexcept {
  switch (loc) {
    case LimitLocation::interior: return "interior";
    case LimitLocation::boundary: return "boundary";
    case LimitLocation::outside: return "outside";
    case LimitLocation::indeterminate: return "indeterminate-at-cutoff";
  }
  return "?";
}

Rat cross(const QPoint& o, const QPoint& a, const QPoint& b) {
  return Rat((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x));
}

Polygon convex_hull(std::vector<QPoint> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return {points};

  std::vector<QPoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], p)) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && sgn(cross(hull[k - 2], hull[k - 1], points[i])) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return {hull};
}

Location locate(const Polygon& polygon, const QPoint& p) {
  const auto& v = polygon.vertices;
  if (v.size() < 3) throw Error(ErrorCode::invalid_argument, "point location needs a polygon with at least three vertices");
  bool on_edge = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int s = sgn(cross(v[i], v[(i + 1) % v.size()], p));
    if (s < 0) return Location::outside;
    if (s == 0) on_edge = true;
  }
  return on_edge ? Location::boundary : Location::interior;
}

bool on_or_under(const QPoint& a, const QPoint& b, const QPoint& p) { return sgn(cross(a, b, p)) <= 0; }

QPoint extreme_point(unsigned r, unsigned l) {
  if (r < 3) throw Error(ErrorCode::out_of_range, "extreme points need r >= 3");
  if (l > r) throw Error(ErrorCode::out_of_range, "extreme point index l must satisfy 0 <= l <= r");
  const auto counts = extreme_counts(r, Partition::balanced(r, l));
  return {make_rat(counts.c3, 3), make_rat(counts.c4, 4)};
}

Polygon polygon_qr(unsigned r) {
  std::vector<QPoint> pts;
  for (unsigned l = 0; l <= r; ++l) pts.push_back(extreme_point(r, l));
  return convex_hull(std::move(pts));
}

Rat max_triangle_density(unsigned r) { return make_rat(static_cast<std::int64_t>(r) * (r - 1), 6); }

namespace {

Rat interpolate(const QPoint& a, const QPoint& b, const Rat& x) {
  if (a.x == b.x) return a.y;
  return Rat(a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x));
}

}  // namespace

Bounds boundary_bounds(unsigned r, const Rat& x) {
  if (r < 3) throw Error(ErrorCode::out_of_range, "boundary bounds need r >= 3");
  if (x < 0 || x > max_triangle_density(r))
    throw Error(ErrorCode::out_of_range, "x = " + to_string(x) + " outside [0, r(r-1)/6]");

  // P^r_r, ..., P^r_1 have strictly increasing x.
  std::vector<QPoint> line;
  for (unsigned l = r; l >= 1; --l) line.push_back(extreme_point(r, l));
  Rat lower;
  for (std::size_t i = 0; i + 1 < line.size(); ++i)
    if (x <= line[i + 1].x) {
      lower = interpolate(line[i], line[i + 1], x);
      break;
    }
  if (x == line.back().x) lower = line.back().y;
  const Rat upper = interpolate(extreme_point(r, 0), extreme_point(r, 1), x);
  return {lower, upper};
}

QPoint scale_point(unsigned r, const QPoint& p) {
  const Rat rr(r);
  return {Rat(6 * p.x / (rr * rr)), Rat(8 * p.y / (rr * rr * rr))};
}

Polygon scaled_polygon(unsigned r) {
  Polygon q = polygon_qr(r);
  for (auto& v : q.vertices) v = scale_point(r, v);
  return q;
}

Polygon limit_region(unsigned cutoff) {
  if (cutoff < 1) throw Error(ErrorCode::invalid_argument, "limit region cutoff must be >= 1");
  std::vector<QPoint> pts{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
  for (unsigned k = 1; k <= cutoff; ++k) pts.push_back({make_rat(1, k), make_rat(1, static_cast<std::int64_t>(k) * k)});
  return convex_hull(std::move(pts));
}

LimitLocation limit_region_contains(const QPoint& p, unsigned cutoff) {
  const Location loc = locate(limit_region(cutoff), p);
  if (p.x > 0 && p.x < make_rat(1, cutoff) && loc != Location::interior) return LimitLocation::indeterminate;
  switch (loc) {
    case Location::interior: return LimitLocation::interior;
    case Location::boundary: return LimitLocation::boundary;
    case Location::outside: return LimitLocation::outside;
  }
  return LimitLocation::outside;
}

QPoint moment_image(unsigned r, const QPoint& p) {
  const Rat rr(r);
  const Rat r3 = rr * rr * rr;
  return {Rat(6 * p.x / r3), Rat(8 * p.y / (r3 * rr) + (2 * rr - 1) / r3)};
}

Polygon moment_region(unsigned r) {
  Polygon q = polygon_qr(r);
  for (auto& v : q.vertices) v = moment_image(r, v);
  return q;
}

}  // namespace trisq
