#pragma once

#include "trisq/rational.hpp"

#include <vector>

namespace trisq {

// Strictly convex polygon, vertices counterclockwise starting from the
// lexicographically smallest one.
struct Polygon {
  std::vector<QPoint> vertices;
};

enum class Location { interior, boundary, outside };
const char* to_string(Location loc) noexcept;

// Twice the signed area of (o, a, b); positive for a left turn.
Rat cross(const QPoint& o, const QPoint& a, const QPoint& b);

// Monotone chain on exact rationals; collinear and duplicate points are
// dropped. Fewer than three distinct points give a degenerate "polygon"
// holding those points.
Polygon convex_hull(std::vector<QPoint> points);

Location locate(const Polygon& polygon, const QPoint& p);

// True when p is on or below the line through a and b (a.x < b.x).
bool on_or_under(const QPoint& a, const QPoint& b, const QPoint& p);

// P^r_l: the (d3, d4) point of the extreme graph C^r_l, with l = 0 standing
// for K_{r,r}.
QPoint extreme_point(unsigned r, unsigned l);

// Convex hull of P^r_0, ..., P^r_r.
Polygon polygon_qr(unsigned r);

// Largest attainable triangle density, r(r-1)/6.
Rat max_triangle_density(unsigned r);

struct Bounds {
  Rat lower;
  Rat upper;
};
// Lower edge is the broken line P^r_1 P^r_2 ... P^r_r; upper edge is the
// segment P^r_0 P^r_1. Both are evaluated from the extreme points directly.
Bounds boundary_bounds(unsigned r, const Rat& x);

// (x, y) -> (6x / r^2, 8y / r^3).
QPoint scale_point(unsigned r, const QPoint& p);
Polygon scaled_polygon(unsigned r);

inline constexpr unsigned kDefaultLimitCutoff = 64;

// Hull of (0,0), (0,1) and (1/k, 1/k^2) for k = 1..cutoff.
Polygon limit_region(unsigned cutoff = kDefaultLimitCutoff);

enum class LimitLocation { interior, boundary, outside, indeterminate };
const char* to_string(LimitLocation loc) noexcept;

// Membership in the limit region. Points with 0 < x < 1/cutoff that the
// truncated hull does not place strictly inside are reported as
// indeterminate: the true lower boundary there has vertices beyond the
// cutoff.
LimitLocation limit_region_contains(const QPoint& p, unsigned cutoff = kDefaultLimitCutoff);

// (x, y) -> (6x / r^3, 8y / r^4 + (2r - 1) / r^3): (d3, d4) to the third and
// fourth moments of the eigenvalue distribution.
QPoint moment_image(unsigned r, const QPoint& p);
Polygon moment_region(unsigned r);

}  // namespace trisq
