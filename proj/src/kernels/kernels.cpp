#include "dotshape/kernels.hpp"

#include "dotshape/errors.hpp"
#include "kernels_impl.hpp"

namespace dotshape::kernels {

namespace {

struct State {
  Isa isa;
  const detail::Impl* impl;
};

State detect() noexcept {
#if defined(DOTSHAPE_HAVE_AVX2_TU)
  if (cpu_has_avx2()) return {Isa::avx2, &detail::avx2_impl()};
#endif
  return {Isa::scalar, &detail::scalar_impl()};
}

State& state() noexcept {
  static State s = detect();
  return s;
}

}  // namespace

bool cpu_has_avx2() noexcept {
#if defined(DOTSHAPE_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Isa active_isa() noexcept { return state().isa; }

void set_isa(Isa isa) {
  if (isa == Isa::scalar) {
    state() = {Isa::scalar, &detail::scalar_impl()};
    return;
  }
#if defined(DOTSHAPE_HAVE_AVX2_TU)
  if (isa == Isa::avx2 && cpu_has_avx2()) {
    state() = {Isa::avx2, &detail::avx2_impl()};
    return;
  }
#endif
  fail(errc::bad_parameter, "requested SIMD implementation is not available");
}

void centroid_distances(const double* xs, const double* ys, std::size_t n,
                        double cx, double cy, double* out) {
  state().impl->centroid_distances(xs, ys, n, cx, cy, out);
}

void dual_dot(const double* values, const double* cos_tab,
              const double* sin_tab, std::size_t n, double& re, double& im) {
  state().impl->dual_dot(values, cos_tab, sin_tab, n, re, im);
}

void point_sq_dists(const double* xs, const double* ys, std::size_t n,
                    double px, double py, double* out) {
  state().impl->point_sq_dists(xs, ys, n, px, py, out);
}

std::size_t crossings(double px, double py, const double* xs,
                      const double* ys, std::size_t n) {
  return state().impl->crossings(px, py, xs, ys, n);
}

double min_sq_dist_to_polygon(double px, double py, const double* xs,
                              const double* ys, std::size_t n) {
  return state().impl->min_sq_dist_to_polygon(px, py, xs, ys, n);
}

}  // namespace dotshape::kernels
