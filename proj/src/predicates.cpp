#include "dotshape/predicates.hpp"

#include <algorithm>
#include <cmath>

namespace dotshape {

double orient_raw(Point2 a, Point2 b, Point2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double orient_norm(Point2 a, Point2 b, Point2 c) {
  const double ux = b.x - a.x, uy = b.y - a.y;
  const double vx = c.x - a.x, vy = c.y - a.y;
  const double det = ux * vy - uy * vx;
  const double m = std::max(std::max(std::fabs(ux), std::fabs(uy)),
                            std::max(std::fabs(vx), std::fabs(vy)));
  if (m == 0.0) return 0.0;
  return det / (m * m);
}

double in_circle_norm(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double ad2 = adx * adx + ady * ady;
  const double bd2 = bdx * bdx + bdy * bdy;
  const double cd2 = cdx * cdx + cdy * cdy;
  const double det = adx * (bdy * cd2 - cdy * bd2) -
                     ady * (bdx * cd2 - cdx * bd2) +
                     ad2 * (bdx * cdy - cdx * bdy);
  double m = std::fabs(adx);
  m = std::max(m, std::fabs(ady));
  m = std::max(m, std::fabs(bdx));
  m = std::max(m, std::fabs(bdy));
  m = std::max(m, std::fabs(cdx));
  m = std::max(m, std::fabs(cdy));
  if (m == 0.0) return 0.0;
  const double m2 = m * m;
  return det / (m2 * m2);
}

double sq_dist_point_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 e = b - a;
  const double len2 = dot(e, e);
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(dot(p - a, e) / len2, 0.0, 1.0);
  const Point2 q = a + t * e;
  return sq_dist(p, q);
}

namespace {

// p known collinear with [a, b]: does it lie within the closed segment?
bool on_segment(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double d1 = orient_raw(c, d, a);
  const double d2 = orient_raw(c, d, b);
  const double d3 = orient_raw(a, b, c);
  const double d4 = orient_raw(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(a, c, d)) return true;
  if (d2 == 0 && on_segment(b, c, d)) return true;
  if (d3 == 0 && on_segment(c, a, b)) return true;
  if (d4 == 0 && on_segment(d, a, b)) return true;
  return false;
}

}  // namespace dotshape
