#include "dotshape/shapes.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "dotshape/errors.hpp"
#include "dotshape/predicates.hpp"

namespace dotshape {

std::optional<std::string> outline_problem(const std::vector<Point2>& pts) {
  const size_t n = pts.size();
  if (n < 3) return "outline needs at least 3 points";
  for (const auto& p : pts)
    if (!is_finite(p)) return "outline has a non-finite coordinate";
  for (size_t i = 0; i < n; ++i)
    if (pts[i] == pts[(i + 1) % n])
      return "outline points " + std::to_string(i) + " and " +
             std::to_string((i + 1) % n) + " coincide";
  // Simplicity: non-adjacent segments may not touch at all.  Quadratic, but
  // outlines are a few thousand points and this runs once per load.
  for (size_t i = 0; i < n; ++i) {
    const Point2 a = pts[i];
    const Point2 b = pts[(i + 1) % n];
    for (size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // wrap-adjacent
      if (segments_intersect(a, b, pts[j], pts[(j + 1) % n]))
        return "outline segments " + std::to_string(i) + " and " +
               std::to_string(j) + " intersect";
    }
  }
  return std::nullopt;
}

DenseOutline make_outline(std::string name, std::vector<Point2> pts) {
  if (auto problem = outline_problem(pts))
    fail(errc::bad_parameter, "outline '" + name + "': " + *problem);
  return {std::move(name), std::move(pts)};
}

SampledShape sample_uniform(const DenseOutline& outline, int k) {
  const auto n = static_cast<std::int64_t>(outline.points.size());
  if (k < 3)
    fail(errc::k_too_small, "K must be at least 3");
  if (k > n)
    fail(errc::k_exceeds_outline,
         "K = " + std::to_string(k) + " exceeds the outline size " +
             std::to_string(n));
  SampledShape s;
  s.source = outline.name;
  s.k = k;
  s.points.reserve(static_cast<size_t>(k));
  for (std::int64_t j = 0; j < k; ++j)
    s.points.push_back(outline.points[static_cast<size_t>(j * n / k)]);
  s.truth_edges.reserve(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j)
    s.truth_edges.push_back(make_edge(j, (j + 1) % k));
  return s;
}

std::string_view builtin_name(Builtin kind) {
  switch (kind) {
    case Builtin::circle: return "circle";
    case Builtin::ellipse: return "ellipse";
    case Builtin::square: return "square";
    case Builtin::star5: return "star5";
    case Builtin::L: return "L";
    case Builtin::U: return "U";
    case Builtin::comb: return "comb";
  }
  throw std::logic_error("unknown builtin");
}

std::optional<Builtin> builtin_from_name(std::string_view name) {
  for (const Builtin k : kAllBuiltins)
    if (builtin_name(k) == name) return k;
  return std::nullopt;
}

namespace {

constexpr double kCx = 256.0;
constexpr double kCy = 256.0;

// n points at equal arc-length steps along the closed polyline, starting at
// vertex 0.  Every vertex whose cumulative length is an exact multiple of
// perimeter/n is reproduced exactly.
std::vector<Point2> resample_closed(const std::vector<Point2>& verts, int n) {
  const size_t m = verts.size();
  std::vector<double> cum(m + 1, 0.0);
  for (size_t i = 0; i < m; ++i)
    cum[i + 1] = cum[i] + dist(verts[i], verts[(i + 1) % m]);
  const double perimeter = cum[m];
  std::vector<Point2> out;
  out.reserve(static_cast<size_t>(n));
  size_t seg = 0;
  for (int j = 0; j < n; ++j) {
    const double target = perimeter * j / n;
    while (seg + 1 < m && cum[seg + 1] <= target) ++seg;
    const double len = cum[seg + 1] - cum[seg];
    const double t = len > 0.0 ? (target - cum[seg]) / len : 0.0;
    const Point2 a = verts[seg];
    const Point2 b = verts[(seg + 1) % m];
    out.push_back(a + t * (b - a));
  }
  return out;
}

std::vector<Point2> circle_points(int n) {
  std::vector<Point2> out;
  out.reserve(static_cast<size_t>(n));
  constexpr double r = 200.0;
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n;
    out.push_back({kCx + r * std::cos(th), kCy + r * std::sin(th)});
  }
  return out;
}

std::vector<Point2> ellipse_points(int n) {
  // Parameter-uniform first, then arc-length resampled so dot spacing is
  // even along the 2:1 ellipse.
  constexpr double a = 200.0, b = 100.0;
  const int fine = 64 * n;
  std::vector<Point2> dense;
  dense.reserve(static_cast<size_t>(fine));
  for (int j = 0; j < fine; ++j) {
    const double th = 2.0 * std::numbers::pi * j / fine;
    dense.push_back({kCx + a * std::cos(th), kCy + b * std::sin(th)});
  }
  return resample_closed(dense, n);
}

std::vector<Point2> polygon_vertices(Builtin kind) {
  switch (kind) {
    case Builtin::square:
      return {{106, 106}, {406, 106}, {406, 406}, {106, 406}};
    case Builtin::star5: {
      std::vector<Point2> v;
      for (int k = 0; k < 10; ++k) {
        const double r = (k % 2 == 0) ? 200.0 : 80.0;
        const double th = std::numbers::pi / 2 + k * std::numbers::pi / 5;
        v.push_back({kCx + r * std::cos(th), kCy + r * std::sin(th)});
      }
      return v;
    }
    case Builtin::L:
      return {{136, 76},  {376, 76},  {376, 196},
              {256, 196}, {256, 436}, {136, 436}};
    case Builtin::U:
      return {{136, 86},  {376, 86},  {376, 426}, {296, 426},
              {296, 166}, {216, 166}, {216, 426}, {136, 426}};
    case Builtin::comb:
      return {{96, 106},  {411, 106}, {411, 406}, {366, 406},
              {366, 166}, {321, 166}, {321, 406}, {276, 406},
              {276, 166}, {231, 166}, {231, 406}, {186, 406},
              {186, 166}, {141, 166}, {141, 406}, {96, 406}};
    default:
      throw std::logic_error("not a polygon builtin");
  }
}

}  // namespace

DenseOutline builtin_shape(Builtin kind, int n) {
  if (n < 50)
    fail(errc::bad_parameter, "builtin outlines need n >= 50");
  std::vector<Point2> pts;
  switch (kind) {
    case Builtin::circle: pts = circle_points(n); break;
    case Builtin::ellipse: pts = ellipse_points(n); break;
    default: pts = resample_closed(polygon_vertices(kind), n); break;
  }
  return make_outline(std::string(builtin_name(kind)), std::move(pts));
}

}  // namespace dotshape
