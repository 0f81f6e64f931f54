#include "dotshape/polygon.hpp"

#include <vector>

#include "dotshape/kernels.hpp"
#include "dotshape/predicates.hpp"

namespace dotshape {

bool point_in_polygon(Point2 p, std::span<const Point2> polygon) {
  const size_t n = polygon.size();
  if (n < 3) return false;
  std::vector<double> xs(n), ys(n);
  for (size_t i = 0; i < n; ++i) {
    xs[i] = polygon[i].x;
    ys[i] = polygon[i].y;
  }
  const double tol2 = kDuplicateTolerance * kDuplicateTolerance;
  if (kernels::min_sq_dist_to_polygon(p.x, p.y, xs.data(), ys.data(), n) <=
      tol2)
    return true;
  return kernels::crossings(p.x, p.y, xs.data(), ys.data(), n) % 2 == 1;
}

}  // namespace dotshape
