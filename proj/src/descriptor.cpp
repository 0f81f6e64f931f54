#include "dotshape/descriptor.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "dotshape/errors.hpp"
#include "dotshape/kernels.hpp"

namespace dotshape {

Descriptor descriptor(std::span<const Point2> seq) {
  const size_t n = seq.size();
  if (n < 21)
    fail(errc::sequence_too_short,
         "descriptor needs at least 21 points, got " + std::to_string(n));

  std::vector<double> xs(n), ys(n);
  double sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    xs[i] = seq[i].x;
    ys[i] = seq[i].y;
    sx += seq[i].x;
    sy += seq[i].y;
  }
  const double cx = sx / static_cast<double>(n);
  const double cy = sy / static_cast<double>(n);

  std::vector<double> d(n);
  kernels::centroid_distances(xs.data(), ys.data(), n, cx, cy, d.data());

  // Twiddle rows with exact index reduction: the angle for sample j at
  // frequency k is 2*pi*((j*k) mod n)/n, so large j*k never loses precision.
  std::vector<double> cos_row(n), sin_row(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::array<double, 11> mags{};
  for (std::int64_t k = 0; k <= 10; ++k) {
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(n); ++j) {
      const double th = step * static_cast<double>((j * k) % static_cast<std::int64_t>(n));
      cos_row[static_cast<size_t>(j)] = std::cos(th);
      sin_row[static_cast<size_t>(j)] = std::sin(th);
    }
    double re = 0.0, im = 0.0;
    kernels::dual_dot(d.data(), cos_row.data(), sin_row.data(), n, re, im);
    mags[static_cast<size_t>(k)] = std::sqrt(re * re + im * im);
  }

  if (mags[0] == 0.0)
    fail(errc::zero_dc, "centroid distances sum to zero; descriptor undefined");

  Descriptor out;
  for (size_t k = 1; k <= 10; ++k) out.values[k - 1] = mags[k] / mags[0];
  return out;
}

double distance(const Descriptor& a, const Descriptor& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace dotshape
