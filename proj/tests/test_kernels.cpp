#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "dotshape/errors.hpp"
#include "dotshape/kernels.hpp"

namespace k = dotshape::kernels;

namespace {

struct Arrays {
  std::vector<double> xs, ys;
};

Arrays random_arrays(std::mt19937_64& rng, size_t n) {
  std::uniform_real_distribution<double> coord(-700.0, 700.0);
  Arrays a;
  a.xs.resize(n);
  a.ys.resize(n);
  for (size_t i = 0; i < n; ++i) {
    a.xs[i] = coord(rng);
    a.ys[i] = coord(rng);
  }
  return a;
}

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

// Runs fn under the scalar ISA, then under AVX2 when available, and hands
// both results to check.  Restores the auto-detected ISA afterwards.
template <typename Fn, typename Check>
void compare_isas(Fn fn, Check check) {
  k::set_isa(k::Isa::scalar);
  auto scalar = fn();
  if (!k::cpu_has_avx2()) {
    MESSAGE("AVX2 unavailable on this host; equivalence check skipped");
    return;
  }
  k::set_isa(k::Isa::avx2);
  auto vec = fn();
  k::set_isa(k::cpu_has_avx2() ? k::Isa::avx2 : k::Isa::scalar);
  check(scalar, vec);
}

}  // namespace

TEST_CASE("isa selection round-trips and rejects unavailable targets") {
  const k::Isa initial = k::active_isa();
  k::set_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  if (k::cpu_has_avx2()) {
    k::set_isa(k::Isa::avx2);
    CHECK(k::active_isa() == k::Isa::avx2);
  } else {
    CHECK_THROWS_AS(k::set_isa(k::Isa::avx2), dotshape::Error);
  }
  k::set_isa(initial);
}

TEST_CASE("centroid_distances matches hypot and is bit-identical across ISAs") {
  std::mt19937_64 rng(11);
  for (size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 64u, 129u}) {
    const Arrays a = random_arrays(rng, n);
    const double cx = 256.0, cy = 131.5;
    auto run = [&] {
      std::vector<double> out(n, -1.0);
      k::centroid_distances(a.xs.data(), a.ys.data(), n, cx, cy, out.data());
      return out;
    };
    compare_isas(run, [&](const auto& s, const auto& v) {
      CHECK(bits_equal(s, v));
    });
    k::set_isa(k::Isa::scalar);
    const auto out = run();
    for (size_t i = 0; i < n; ++i) {
      const double expect = std::sqrt((a.xs[i] - cx) * (a.xs[i] - cx) +
                                      (a.ys[i] - cy) * (a.ys[i] - cy));
      CHECK(out[i] == doctest::Approx(expect).epsilon(1e-14));
    }
  }
}

TEST_CASE("point_sq_dists is bit-identical across ISAs") {
  std::mt19937_64 rng(12);
  for (size_t n : {1u, 5u, 8u, 100u, 257u}) {
    const Arrays a = random_arrays(rng, n);
    auto run = [&] {
      std::vector<double> out(n);
      k::point_sq_dists(a.xs.data(), a.ys.data(), n, 13.25, -7.75, out.data());
      return out;
    };
    compare_isas(run,
                 [](const auto& s, const auto& v) { CHECK(bits_equal(s, v)); });
  }
}

TEST_CASE("dual_dot agrees with long-double reference and across ISAs") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  for (size_t n : {1u, 4u, 21u, 64u, 300u}) {
    std::vector<double> values(n), ct(n), st(n);
    for (size_t i = 0; i < n; ++i) {
      values[i] = 300.0 + 200.0 * val(rng);
      const double th = val(rng);
      ct[i] = std::cos(th);
      st[i] = std::sin(th);
    }
    long double re_ref = 0.0L, im_ref = 0.0L;
    for (size_t i = 0; i < n; ++i) {
      re_ref += static_cast<long double>(values[i]) * ct[i];
      im_ref += static_cast<long double>(values[i]) * st[i];
    }
    auto run = [&] {
      double re = 0.0, im = 0.0;
      k::dual_dot(values.data(), ct.data(), st.data(), n, re, im);
      return std::pair<double, double>(re, im);
    };
    const double scale = 300.0 * static_cast<double>(n);
    compare_isas(run, [&](const auto& s, const auto& v) {
      // dual_dot may reassociate, so ISAs agree only to rounding error.
      CHECK(std::abs(s.first - v.first) <= 1e-12 * scale);
      CHECK(std::abs(s.second - v.second) <= 1e-12 * scale);
    });
    k::set_isa(k::Isa::scalar);
    const auto got = run();
    CHECK(std::abs(got.first - static_cast<double>(re_ref)) <= 1e-12 * scale);
    CHECK(std::abs(got.second - static_cast<double>(im_ref)) <= 1e-12 * scale);
  }
}

TEST_CASE("crossings implements the half-open rule and matches across ISAs") {
  // Unit square, CCW.
  const std::vector<double> xs = {0, 1, 1, 0};
  const std::vector<double> ys = {0, 0, 1, 1};
  auto count = [&](double px, double py) {
    return k::crossings(px, py, xs.data(), ys.data(), xs.size());
  };
  k::set_isa(k::Isa::scalar);
  CHECK(count(0.5, 0.5) == 1);   // inside: one crossing (right side)
  CHECK(count(1.5, 0.5) == 0);   // outside, right of the square
  CHECK(count(-1.0, 0.5) == 2);  // outside left: ray crosses both sides
  CHECK(count(0.5, -0.5) == 0);  // below
  CHECK(count(-1.0, 1.0) == 0);  // ray along the top edge: horizontal edges
                                 // never satisfy the half-open straddle test

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 3 + static_cast<size_t>(trial % 13);
    const Arrays poly = random_arrays(rng, n);
    std::uniform_real_distribution<double> coord(-800.0, 800.0);
    const double px = coord(rng), py = coord(rng);
    auto run = [&] {
      return k::crossings(px, py, poly.xs.data(), poly.ys.data(), n);
    };
    compare_isas(run, [](size_t s, size_t v) { CHECK(s == v); });
  }
}

TEST_CASE("min_sq_dist_to_polygon is exact on axis cases and bit-identical") {
  const std::vector<double> xs = {0, 4, 4, 0};
  const std::vector<double> ys = {0, 0, 4, 4};
  k::set_isa(k::Isa::scalar);
  const double inside =
      k::min_sq_dist_to_polygon(2.0, 1.0, xs.data(), ys.data(), 4);
  CHECK(inside == doctest::Approx(1.0));  // nearest edge is the bottom
  const double corner =
      k::min_sq_dist_to_polygon(-3.0, -4.0, xs.data(), ys.data(), 4);
  CHECK(corner == doctest::Approx(25.0));  // clamps to the (0, 0) vertex
  const double on_edge =
      k::min_sq_dist_to_polygon(2.0, 0.0, xs.data(), ys.data(), 4);
  CHECK(on_edge == 0.0);

  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> coord(-800.0, 800.0);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 3 + static_cast<size_t>(trial % 17);
    const Arrays poly = random_arrays(rng, n);
    const double px = coord(rng), py = coord(rng);
    auto run = [&] {
      return k::min_sq_dist_to_polygon(px, py, poly.xs.data(), poly.ys.data(),
                                       n);
    };
    compare_isas(run, [](double s, double v) {
      CHECK(std::memcmp(&s, &v, sizeof(double)) == 0);
    });
  }
}

TEST_CASE("degenerate polygon edges (repeated vertices) are ignored") {
  // Second edge has zero length; distance must still be finite and correct.
  const std::vector<double> xs = {0, 1, 1, 0};
  const std::vector<double> ys = {0, 0, 0, 1};
  k::set_isa(k::Isa::scalar);
  const double d = k::min_sq_dist_to_polygon(2.0, 0.0, xs.data(), ys.data(), 4);
  CHECK(d == doctest::Approx(1.0));
}
