#pragma once

#include <span>
#include <string>

#include "dotshape/grouping.hpp"
#include "dotshape/shapes.hpp"
#include "dotshape/triangulated_graph.hpp"

namespace dotshape::svg {

// All renders share the stimulus style: a 512 x 512 viewBox on a light-gray
// background, dots as red disks of radius 10, triangles filled a lighter
// gray with a slightly darker stroke, grouping edges in blue.
inline constexpr int kCanvas = 512;
inline constexpr const char* kBackground = "#CCCCCC";
inline constexpr const char* kTriangleFill = "#D9D9D9";
inline constexpr const char* kTriangleStroke = "#B3B3B3";
inline constexpr const char* kDotFill = "#CC0000";
inline constexpr const char* kEdgeStroke = "#0000CC";
inline constexpr double kDotRadius = 10.0;

// Dots only.
std::string render_points(std::span<const Point2> pts);

// Every alive triangle of the graph, dots on top.
std::string render_triangulation(const TriangulatedGraph& g);

// Alive triangles whose centroid lies inside the outline, dots on top.
std::string render_triangles_inside(const TriangulatedGraph& g,
                                    const DenseOutline& outline);

// Selected grouping edges over the dots.
std::string render_grouping(std::span<const Point2> pts,
                            const GroupingResult& result);

}  // namespace dotshape::svg
