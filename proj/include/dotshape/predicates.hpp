#pragma once

#include "dotshape/point.hpp"

namespace dotshape {

// Degeneracy tolerance applied to *normalized* predicate determinants.
inline constexpr double kPredicateEps = 1e-12;

// Two input points closer than this are treated as duplicates.
inline constexpr double kDuplicateTolerance = 1e-9;

// Raw twice-signed-area of (a, b, c); > 0 when c is left of a->b.
double orient_raw(Point2 a, Point2 b, Point2 c);

// orient_raw normalized by the squared magnitude of the largest coordinate
// difference involved, so kPredicateEps means the same thing at any scale.
double orient_norm(Point2 a, Point2 b, Point2 c);

// In-circle determinant for CCW triangle (a, b, c), normalized by the fourth
// power of the largest coordinate difference; > 0 when d is strictly inside
// the circumcircle.
double in_circle_norm(Point2 a, Point2 b, Point2 c, Point2 d);

// Squared distance from p to segment [a, b].
double sq_dist_point_segment(Point2 p, Point2 a, Point2 b);

// True when closed segments [a, b] and [c, d] share at least one point
// (proper crossings, collinear overlap and endpoint touching all count).
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

}  // namespace dotshape
