#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dotshape/point.hpp"
#include "dotshape/triangulated_graph.hpp"

namespace dotshape {

// Dense closed outline of a shape: an ordered simple cycle of points
// (consecutive points distinct, no segment crossings, last connects to first).
struct DenseOutline {
  std::string name;
  std::vector<Point2> points;
};

// Empty when the cycle is valid, otherwise a human-readable reason.
std::optional<std::string> outline_problem(const std::vector<Point2>& pts);

// Validating constructor; throws Error{bad_parameter} on an invalid cycle.
DenseOutline make_outline(std::string name, std::vector<Point2> pts);

// K points sampled from an outline (ground truth for grouping experiments).
// truth_edges connect consecutive samples, including the closing pair.
struct SampledShape {
  std::string source;
  int k = 0;
  std::vector<Point2> points;
  std::vector<Edge> truth_edges;
};

// Index-uniform sampling: sample j is outline point floor(j * N / K).
// Errors: k_too_small (K < 3), k_exceeds_outline (K > N).
SampledShape sample_uniform(const DenseOutline& outline, int k);

enum class Builtin { circle, ellipse, square, star5, L, U, comb };

inline constexpr Builtin kAllBuiltins[] = {
    Builtin::circle, Builtin::ellipse, Builtin::square, Builtin::star5,
    Builtin::L,      Builtin::U,       Builtin::comb,
};

std::string_view builtin_name(Builtin kind);
std::optional<Builtin> builtin_from_name(std::string_view name);

// Deterministic outline of a builtin shape, centered in a 512 x 512 box,
// with n near-arc-length-uniform points (n >= 50, default 720).
DenseOutline builtin_shape(Builtin kind, int n = 720);

}  // namespace dotshape
