#pragma once

#include <cstddef>

// Internal: per-ISA entry points behind dotshape::kernels.  The scalar set is
// the reference; the avx2 set exists only on x86 builds.
namespace dotshape::kernels::detail {

struct Impl {
  void (*centroid_distances)(const double*, const double*, std::size_t,
                             double, double, double*);
  void (*dual_dot)(const double*, const double*, const double*, std::size_t,
                   double&, double&);
  void (*point_sq_dists)(const double*, const double*, std::size_t, double,
                         double, double*);
  std::size_t (*crossings)(double, double, const double*, const double*,
                           std::size_t);
  double (*min_sq_dist_to_polygon)(double, double, const double*,
                                   const double*, std::size_t);
};

const Impl& scalar_impl() noexcept;

#if defined(DOTSHAPE_HAVE_AVX2_TU)
const Impl& avx2_impl() noexcept;
#endif

// Shared by the scalar implementation and the tails of the SIMD one.  The
// per-element formulas below must match the vector lanes exactly so that the
// bit-exact kernels stay bit-exact.
inline double scalar_centroid_distance(double x, double y, double cx,
                                       double cy);
inline double scalar_point_sq_dist(double x, double y, double px, double py);
inline bool scalar_edge_crossed(double px, double py, double ax, double ay,
                                double bx, double by);
inline double scalar_sq_dist_to_edge(double px, double py, double ax,
                                     double ay, double bx, double by);

}  // namespace dotshape::kernels::detail

#include <cmath>

namespace dotshape::kernels::detail {

inline double scalar_centroid_distance(double x, double y, double cx,
                                       double cy) {
  const double dx = x - cx;
  const double dy = y - cy;
  return std::sqrt(dx * dx + dy * dy);
}

inline double scalar_point_sq_dist(double x, double y, double px, double py) {
  const double dx = x - px;
  const double dy = y - py;
  return dx * dx + dy * dy;
}

// Half-open even-odd rule in multiply-through form (no division): the edge
// (a, b) is crossed by the +x ray from p iff the endpoints straddle the
// horizontal line through p and p is left of the edge/line intersection.
inline bool scalar_edge_crossed(double px, double py, double ax, double ay,
                                double bx, double by) {
  const bool straddles = (ay > py) != (by > py);
  if (!straddles) return false;
  const double t = (bx - ax) * (py - ay) - (px - ax) * (by - ay);
  return (by > ay) ? (t > 0.0) : (t < 0.0);
}

inline double scalar_sq_dist_to_edge(double px, double py, double ax,
                                     double ay, double bx, double by) {
  const double ex = bx - ax;
  const double ey = by - ay;
  const double len2 = ex * ex + ey * ey;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((px - ax) * ex + (py - ay) * ey) / len2;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
  }
  const double qx = ax + t * ex;
  const double qy = ay + t * ey;
  const double dx = px - qx;
  const double dy = py - qy;
  return dx * dx + dy * dy;
}

}  // namespace dotshape::kernels::detail
