#pragma once

#include <cstddef>

// Hot arithmetic loops, shipped as scalar reference implementations plus an
// AVX2 variant chosen once at startup.  Combinatorial code (triangulation,
// removal queue) stays scalar; only the data-parallel kernels live here.
//
// Bit-exactness: centroid_distances, point_sq_dists, crossings and
// min_sq_dist_to_polygon perform the same per-element arithmetic in every
// implementation and must return bit-identical results.  dual_dot may
// reassociate its sums, so implementations only agree to rounding error.
namespace dotshape::kernels {

enum class Isa { scalar, avx2 };

bool cpu_has_avx2() noexcept;

// Implementation currently in use (auto-detected on first use).
Isa active_isa() noexcept;

// Force an implementation, e.g. to pin the scalar path in tests.
// Throws Error{bad_parameter} if the requested ISA is unavailable.
void set_isa(Isa isa);

// out[i] = sqrt((xs[i] - cx)^2 + (ys[i] - cy)^2)
void centroid_distances(const double* xs, const double* ys, std::size_t n,
                        double cx, double cy, double* out);

// re = sum(values[i] * cos_tab[i]); im = sum(values[i] * sin_tab[i])
void dual_dot(const double* values, const double* cos_tab,
              const double* sin_tab, std::size_t n, double& re, double& im);

// out[i] = (xs[i] - px)^2 + (ys[i] - py)^2
void point_sq_dists(const double* xs, const double* ys, std::size_t n,
                    double px, double py, double* out);

// Number of closed-polygon edges crossed by the ray from (px, py) toward +x,
// using the half-open vertex rule; parity gives even-odd containment.
std::size_t crossings(double px, double py, const double* xs,
                      const double* ys, std::size_t n);

// Minimum squared distance from (px, py) to the closed polygon boundary.
double min_sq_dist_to_polygon(double px, double py, const double* xs,
                              const double* ys, std::size_t n);

}  // namespace dotshape::kernels
