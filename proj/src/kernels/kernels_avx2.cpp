// AVX2 variants of the arithmetic kernels.  This file is compiled with
// -mavx2 only; callers reach it through the runtime dispatch table, never
// directly.  FMA is deliberately not used so the per-lane arithmetic matches
// the scalar reference operation for operation (see kernels.hpp for which
// kernels promise bit-identical results).
#include "kernels_impl.hpp"

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)

#include <immintrin.h>

namespace dotshape::kernels::detail {

namespace {

double hsum_fixed(__m256d v) {
  // Fixed reduction order (l0 + l1) + (l2 + l3); deterministic across runs.
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d l01 = _mm_hadd_pd(lo, lo);
  const __m128d l23 = _mm_hadd_pd(hi, hi);
  return _mm_cvtsd_f64(l01) + _mm_cvtsd_f64(l23);
}

double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_min_sd(m, _mm_unpackhi_pd(m, m)));
}

void centroid_distances_avx2(const double* xs, const double* ys,
                             std::size_t n, double cx, double cy,
                             double* out) {
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vcx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vcy);
    const __m256d s =
        _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
  }
  for (; i < n; ++i) out[i] = scalar_centroid_distance(xs[i], ys[i], cx, cy);
}

void dual_dot_avx2(const double* values, const double* cos_tab,
                   const double* sin_tab, std::size_t n, double& re,
                   double& im) {
  __m256d racc = _mm256_setzero_pd();
  __m256d macc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(values + i);
    racc = _mm256_add_pd(racc, _mm256_mul_pd(v, _mm256_loadu_pd(cos_tab + i)));
    macc = _mm256_add_pd(macc, _mm256_mul_pd(v, _mm256_loadu_pd(sin_tab + i)));
  }
  double r = hsum_fixed(racc);
  double m = hsum_fixed(macc);
  for (; i < n; ++i) {
    r += values[i] * cos_tab[i];
    m += values[i] * sin_tab[i];
  }
  re = r;
  im = m;
}

void point_sq_dists_avx2(const double* xs, const double* ys, std::size_t n,
                         double px, double py, double* out) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vpy);
    _mm256_storeu_pd(
        out + i, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
  }
  for (; i < n; ++i) out[i] = scalar_point_sq_dist(xs[i], ys[i], px, py);
}

std::size_t crossings_avx2(double px, double py, const double* xs,
                           const double* ys, std::size_t n) {
  // Same multiply-through predicate as the scalar kernel, four edges a time;
  // every per-edge decision is bit-identical, so the count is exact.
  std::size_t count = 0;
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 1;
  for (; i + 4 <= n; i += 4) {
    const __m256d ax = _mm256_loadu_pd(xs + i - 1);
    const __m256d ay = _mm256_loadu_pd(ys + i - 1);
    const __m256d bx = _mm256_loadu_pd(xs + i);
    const __m256d by = _mm256_loadu_pd(ys + i);
    const __m256d a_above = _mm256_cmp_pd(ay, vpy, _CMP_GT_OQ);
    const __m256d b_above = _mm256_cmp_pd(by, vpy, _CMP_GT_OQ);
    const __m256d straddle = _mm256_xor_pd(a_above, b_above);
    const __m256d t = _mm256_sub_pd(
        _mm256_mul_pd(_mm256_sub_pd(bx, ax), _mm256_sub_pd(vpy, ay)),
        _mm256_mul_pd(_mm256_sub_pd(vpx, ax), _mm256_sub_pd(by, ay)));
    const __m256d up = _mm256_cmp_pd(by, ay, _CMP_GT_OQ);
    const __m256d hit = _mm256_or_pd(
        _mm256_and_pd(up, _mm256_cmp_pd(t, zero, _CMP_GT_OQ)),
        _mm256_andnot_pd(up, _mm256_cmp_pd(t, zero, _CMP_LT_OQ)));
    count += static_cast<std::size_t>(
        __builtin_popcount(_mm256_movemask_pd(_mm256_and_pd(straddle, hit))));
  }
  for (; i < n; ++i)
    if (scalar_edge_crossed(px, py, xs[i - 1], ys[i - 1], xs[i], ys[i]))
      ++count;
  if (scalar_edge_crossed(px, py, xs[n - 1], ys[n - 1], xs[0], ys[0]))
    ++count;
  return count;
}

double min_sq_dist_to_polygon_avx2(double px, double py, const double* xs,
                                   const double* ys, std::size_t n) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d best = _mm256_set1_pd(__builtin_huge_val());
  std::size_t i = 1;
  for (; i + 4 <= n; i += 4) {
    const __m256d ax = _mm256_loadu_pd(xs + i - 1);
    const __m256d ay = _mm256_loadu_pd(ys + i - 1);
    const __m256d ex = _mm256_sub_pd(_mm256_loadu_pd(xs + i), ax);
    const __m256d ey = _mm256_sub_pd(_mm256_loadu_pd(ys + i), ay);
    const __m256d len2 =
        _mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey));
    const __m256d dxa = _mm256_sub_pd(vpx, ax);
    const __m256d dya = _mm256_sub_pd(vpy, ay);
    const __m256d num =
        _mm256_add_pd(_mm256_mul_pd(dxa, ex), _mm256_mul_pd(dya, ey));
    __m256d t = _mm256_div_pd(num, len2);
    t = _mm256_min_pd(_mm256_max_pd(t, zero), one);
    // Degenerate zero-length edges project to their first endpoint.
    t = _mm256_and_pd(t, _mm256_cmp_pd(len2, zero, _CMP_GT_OQ));
    // q = a + t*e, d = p - q: keep the exact operation order of the scalar
    // kernel so the results stay bit-identical.
    const __m256d qx = _mm256_add_pd(ax, _mm256_mul_pd(t, ex));
    const __m256d qy = _mm256_add_pd(ay, _mm256_mul_pd(t, ey));
    const __m256d dx = _mm256_sub_pd(vpx, qx);
    const __m256d dy = _mm256_sub_pd(vpy, qy);
    best = _mm256_min_pd(
        best, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
  }
  double b = hmin(best);
  for (; i < n; ++i) {
    const double d =
        scalar_sq_dist_to_edge(px, py, xs[i - 1], ys[i - 1], xs[i], ys[i]);
    if (d < b) b = d;
  }
  const double d =
      scalar_sq_dist_to_edge(px, py, xs[n - 1], ys[n - 1], xs[0], ys[0]);
  return d < b ? d : b;
}

}  // namespace

const Impl& avx2_impl() noexcept {
  static const Impl impl = {
      centroid_distances_avx2, dual_dot_avx2,      point_sq_dists_avx2,
      crossings_avx2,          min_sq_dist_to_polygon_avx2,
  };
  return impl;
}

}  // namespace dotshape::kernels::detail

#endif  // x86
