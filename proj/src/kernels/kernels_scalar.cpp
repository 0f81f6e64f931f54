#include "kernels_impl.hpp"

namespace dotshape::kernels::detail {

namespace {

void centroid_distances_scalar(const double* xs, const double* ys,
                               std::size_t n, double cx, double cy,
                               double* out) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = scalar_centroid_distance(xs[i], ys[i], cx, cy);
}

void dual_dot_scalar(const double* values, const double* cos_tab,
                     const double* sin_tab, std::size_t n, double& re,
                     double& im) {
  double r = 0.0, m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r += values[i] * cos_tab[i];
    m += values[i] * sin_tab[i];
  }
  re = r;
  im = m;
}

void point_sq_dists_scalar(const double* xs, const double* ys, std::size_t n,
                           double px, double py, double* out) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = scalar_point_sq_dist(xs[i], ys[i], px, py);
}

std::size_t crossings_scalar(double px, double py, const double* xs,
                             const double* ys, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++)
    if (scalar_edge_crossed(px, py, xs[j], ys[j], xs[i], ys[i])) ++count;
  return count;
}

double min_sq_dist_to_polygon_scalar(double px, double py, const double* xs,
                                     const double* ys, std::size_t n) {
  double best = scalar_sq_dist_to_edge(px, py, xs[n - 1], ys[n - 1], xs[0],
                                       ys[0]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = scalar_sq_dist_to_edge(px, py, xs[i], ys[i], xs[i + 1],
                                            ys[i + 1]);
    if (d < best) best = d;
  }
  return best;
}

}  // namespace

const Impl& scalar_impl() noexcept {
  static const Impl impl = {
      centroid_distances_scalar, dual_dot_scalar,      point_sq_dists_scalar,
      crossings_scalar,          min_sq_dist_to_polygon_scalar,
  };
  return impl;
}

}  // namespace dotshape::kernels::detail
