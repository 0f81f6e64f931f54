#pragma once

#include <array>
#include <span>

#include "dotshape/point.hpp"

namespace dotshape {

// Shape signature: magnitudes of the 10 lowest nonzero-frequency Fourier
// coefficients of the centroid-distance sequence, normalized by the DC
// magnitude.  Invariant to translation, rotation (cyclic shift), traversal
// direction and scale.
struct Descriptor {
  std::array<double, 10> values{};
};

// Computes the descriptor of a closed point sequence (first point not
// repeated at the end).  Errors: sequence_too_short (< 21 points, the
// shortest sequence for which all 10 frequencies are below Nyquist),
// zero_dc (all points coincide with the centroid).
Descriptor descriptor(std::span<const Point2> closed_sequence);

// Euclidean distance between descriptors.
double distance(const Descriptor& a, const Descriptor& b);

}  // namespace dotshape
