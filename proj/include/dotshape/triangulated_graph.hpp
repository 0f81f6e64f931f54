#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dotshape/point.hpp"

namespace dotshape {

// Undirected edge between vertex indices, stored canonically (first < second).
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Triangulation of a point set supporting greedy boundary-triangle removal.
//
// Vertices are indices into the original point set and never disappear;
// triangles are created by delaunay() and only ever flip from alive to
// removed.  The edge table maps each edge that still bounds at least one
// alive triangle to its one or two incident alive triangles.
//
// Invariants maintained across removals:
//   * boundary edges (exactly one alive triangle) form one simple cycle;
//   * after r removals on a K-point set with h initial hull vertices there
//     are 2K - h - 2 - r alive triangles and 3K - h - 3 - r alive edges;
//   * a removed boundary edge never reappears, and the triangle associated
//     with a boundary edge never changes while the edge exists.
class TriangulatedGraph {
 public:
  struct Triangle {
    std::array<int, 3> v;  // CCW, rotated so v[0] is the smallest index
    bool alive = true;
  };

  const std::vector<Point2>& points() const { return points_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  int vertex_count() const { return static_cast<int>(points_.size()); }
  int alive_triangle_count() const { return alive_tris_; }
  int alive_edge_count() const { return alive_edges_; }
  int boundary_vertex_count() const { return boundary_count_; }
  int hull_vertex_count() const { return hull_count_; }
  int removed_triangle_count() const { return removed_; }

  bool has_edge(int x, int y) const;
  bool on_boundary(int v) const { return boundary_[static_cast<size_t>(v)] != 0; }
  bool is_boundary_edge(int x, int y) const;

  // Vertex opposite a boundary edge, i.e. the third vertex of its single
  // alive triangle.  Throws Error{not_boundary_edge} otherwise.
  int opposite_vertex(int x, int y) const;

  // Flatness of a boundary edge: |xy| minus the shortest side of its
  // triangle (non-negative; 0 when xy is itself shortest).
  double flatness(int x, int y) const;

  // A boundary edge is removable when its opposite vertex is internal;
  // removing such a triangle keeps the boundary a simple cycle.
  bool is_removable(int x, int y) const;

  // Removes the single triangle on boundary edge (x, y) and returns the two
  // edges that boundary status just moved to.  Throws not_boundary_edge /
  // not_removable.
  std::pair<Edge, Edge> remove_triangle(int x, int y);

  // All current boundary edges, canonically ordered.
  std::vector<Edge> boundary_edges() const;

  // Boundary cycle as vertex indices, starting at the lowest-indexed
  // boundary vertex and oriented counterclockwise.
  std::vector<int> boundary_sequence() const;

 private:
  friend class DelaunayBuilder;

  static std::uint64_t edge_key(int x, int y);
  const std::array<int, 2>* find_slot(int x, int y) const;

  std::vector<Point2> points_;
  std::vector<Triangle> triangles_;
  std::unordered_map<std::uint64_t, std::array<int, 2>> edges_;
  std::vector<char> boundary_;
  int alive_tris_ = 0;
  int alive_edges_ = 0;
  int boundary_count_ = 0;
  int hull_count_ = 0;
  int removed_ = 0;
};

// Delaunay triangulation (up to the degeneracy tolerance; cocircular ties
// are resolved toward the diagonal with the smaller lexicographic endpoint).
// Deterministic: identical input yields an identical graph.
// Errors: too_few_points (< 3), duplicate_points, degenerate_input (all
// collinear), bad_parameter (non-finite coordinates).
TriangulatedGraph delaunay(const std::vector<Point2>& pts);

}  // namespace dotshape
