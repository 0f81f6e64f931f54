#pragma once

#include <span>

#include "dotshape/point.hpp"

namespace dotshape {

// Even-odd containment with an inclusive boundary: points within 1e-9 of the
// polygon boundary count as inside regardless of ray parity.
bool point_in_polygon(Point2 p, std::span<const Point2> polygon);

}  // namespace dotshape
