#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "dotshape/errors.hpp"
#include "dotshape/predicates.hpp"
#include "dotshape/shapes.hpp"
#include "dotshape/triangulated_graph.hpp"
#include "oracles.hpp"

using dotshape::delaunay;
using dotshape::Edge;
using dotshape::Error;
using dotshape::errc;
using dotshape::Point2;
using dotshape::TriangulatedGraph;

namespace {

void check_euler(const TriangulatedGraph& g, int h) {
  const int k = g.vertex_count();
  CHECK(g.hull_vertex_count() == h);
  CHECK(g.alive_triangle_count() == 2 * k - h - 2);
  CHECK(g.alive_edge_count() == 3 * k - h - 3);
  CHECK(g.boundary_vertex_count() == h);
}

void check_boundary_cycle(const TriangulatedGraph& g) {
  const std::vector<int> seq = g.boundary_sequence();
  CHECK(static_cast<int>(seq.size()) == g.boundary_vertex_count());
  CHECK(seq[0] == *std::min_element(seq.begin(), seq.end()));
  double area2 = 0.0;
  for (size_t i = 0; i < seq.size(); ++i) {
    const Point2 a = g.points()[static_cast<size_t>(seq[i])];
    const Point2 b = g.points()[static_cast<size_t>(seq[(i + 1) % seq.size()])];
    area2 += a.x * b.y - b.x * a.y;
  }
  CHECK(area2 > 0.0);  // counterclockwise
  for (size_t i = 0; i < seq.size(); ++i)
    CHECK(g.is_boundary_edge(seq[i], seq[(i + 1) % seq.size()]));
}

void check_all_ccw(const TriangulatedGraph& g) {
  for (const auto& t : g.triangles()) {
    if (!t.alive) continue;
    const auto& p = g.points();
    CHECK(dotshape::orient_raw(p[static_cast<size_t>(t.v[0])],
                               p[static_cast<size_t>(t.v[1])],
                               p[static_cast<size_t>(t.v[2])]) > 0.0);
  }
}

bool same_triangulation(const TriangulatedGraph& a, const TriangulatedGraph& b) {
  if (a.triangles().size() != b.triangles().size()) return false;
  for (size_t i = 0; i < a.triangles().size(); ++i) {
    if (a.triangles()[i].v != b.triangles()[i].v) return false;
    if (a.triangles()[i].alive != b.triangles()[i].alive) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cocircular tie on the unit square picks the smaller-endpoint diagonal") {
  const std::vector<Point2> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const TriangulatedGraph g = delaunay(square);
  check_euler(g, 4);
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.boundary_sequence() == std::vector<int>{0, 1, 2, 3});
  check_all_ccw(g);

  // Same square, relabeled so the other geometric diagonal wins the tie.
  const std::vector<Point2> relabeled = {{1, 1}, {0, 0}, {1, 0}, {0, 1}};
  const TriangulatedGraph g2 = delaunay(relabeled);
  check_euler(g2, 4);
  CHECK(g2.has_edge(0, 1));       // diagonal (1,1)-(0,0)
  CHECK_FALSE(g2.has_edge(2, 3));  // diagonal (1,0)-(0,1)
  check_all_ccw(g2);
}

TEST_CASE("square with center triangulates as a fan") {
  const std::vector<Point2> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const TriangulatedGraph g = delaunay(pts);
  check_euler(g, 4);
  for (int v = 0; v < 4; ++v) CHECK(g.has_edge(v, 4));
  CHECK_FALSE(g.on_boundary(4));
  CHECK(g.boundary_edges() ==
        std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  for (const Edge& e : g.boundary_edges()) {
    CHECK(g.opposite_vertex(e.first, e.second) == 4);
    CHECK(g.is_removable(e.first, e.second));
    CHECK(g.flatness(e.first, e.second) ==
          doctest::Approx(1.0 - std::sqrt(0.5)));
  }
  CHECK_FALSE(g.is_boundary_edge(0, 4));
  CHECK_THROWS_AS(g.opposite_vertex(0, 4), Error);   // internal edge
  CHECK_THROWS_AS(g.flatness(0, 2), Error);          // absent edge
}

TEST_CASE("remove_triangle exposes the opposite vertex and guards invariants") {
  const std::vector<Point2> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  TriangulatedGraph g = delaunay(pts);
  const auto [e1, e2] = g.remove_triangle(0, 1);
  CHECK(e1 == Edge{0, 4});
  CHECK(e2 == Edge{1, 4});
  CHECK(g.alive_triangle_count() == 3);
  CHECK(g.alive_edge_count() == 7);
  CHECK(g.boundary_vertex_count() == 5);
  CHECK(g.on_boundary(4));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.is_boundary_edge(0, 4));
  CHECK(g.is_boundary_edge(1, 4));
  // Every remaining boundary edge now faces a boundary vertex: nothing is
  // removable and the boundary is the 5-cycle through the old center.
  for (const Edge& e : g.boundary_edges())
    CHECK_FALSE(g.is_removable(e.first, e.second));
  CHECK_THROWS_AS(g.remove_triangle(1, 2), Error);  // opposite on boundary
  CHECK_THROWS_AS(g.remove_triangle(0, 1), Error);  // edge no longer exists
  CHECK(g.boundary_sequence() == std::vector<int>{0, 4, 1, 2, 3});
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(delaunay({{0, 0}, {1, 0}}), Error);
  try {
    delaunay({{0, 0}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_few_points);
  }
  try {
    delaunay({{0, 0}, {1e-10, 0}, {1, 1}});
    FAIL("duplicate points accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::duplicate_points);
  }
  try {
    delaunay({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    FAIL("collinear input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_input);
  }
  try {
    delaunay({{0, 0}, {1, 0}, {std::numeric_limits<double>::quiet_NaN(), 1}});
    FAIL("non-finite input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_parameter);
  }
  try {
    delaunay({{0, 0}, {1, 0}, {0, 2e12}});
    FAIL("oversized coordinates accepted");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_parameter);
  }
}

TEST_CASE("grid point sets with collinear hull runs and cocircular quads") {
  // Border of a 3x3 grid: every point is a hull-boundary vertex.
  const std::vector<Point2> border = {{0, 0}, {1, 0}, {2, 0}, {2, 1},
                                      {2, 2}, {1, 2}, {0, 2}, {0, 1}};
  CHECK(oracles::hull_boundary_count_jarvis(border) == 8);
  CHECK(oracles::hull_boundary_count_cubic(border) == 8);
  const TriangulatedGraph g = delaunay(border);
  check_euler(g, 8);
  CHECK(oracles::circumcircle_violations(g) == 0);
  check_boundary_cycle(g);
  check_all_ccw(g);

  // Full 3x3 grid: adds a single interior vertex.
  std::vector<Point2> grid = border;
  grid.push_back({1, 1});
  const TriangulatedGraph g2 = delaunay(grid);
  check_euler(g2, 8);
  CHECK(oracles::circumcircle_violations(g2) == 0);
  CHECK_FALSE(g2.on_boundary(8));
  check_all_ccw(g2);
  CHECK(same_triangulation(g2, delaunay(grid)));
}

TEST_CASE("all-cocircular input: dense circle sample") {
  const dotshape::DenseOutline circle =
      dotshape::builtin_shape(dotshape::Builtin::circle, 120);
  const TriangulatedGraph g = delaunay(circle.points);
  check_euler(g, 120);
  CHECK(oracles::circumcircle_violations(g) == 0);
  const std::vector<int> seq = g.boundary_sequence();
  std::vector<int> expect(120);
  for (int i = 0; i < 120; ++i) expect[static_cast<size_t>(i)] = i;
  CHECK(seq == expect);
  CHECK(same_triangulation(g, delaunay(circle.points)));
}

TEST_CASE("random sets satisfy Euler counts, empty circumcircles, determinism") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const int k = (trial % 2 == 0) ? 10 : 50;
    const std::vector<Point2> pts = oracles::random_points(rng, k);
    CAPTURE(trial);
    const TriangulatedGraph g = delaunay(pts);
    const int h = oracles::hull_boundary_count_jarvis(pts);
    CHECK(h == oracles::hull_boundary_count_cubic(pts));
    check_euler(g, h);
    CHECK(oracles::circumcircle_violations(g) == 0);
    check_boundary_cycle(g);
    check_all_ccw(g);
    CHECK(same_triangulation(g, delaunay(pts)));
  }
}

TEST_CASE("boundary edges match triangle incidence counts") {
  std::mt19937_64 rng(77);
  const std::vector<Point2> pts = oracles::random_points(rng, 40);
  const TriangulatedGraph g = delaunay(pts);
  // Count edge incidences straight from the alive triangle list.
  std::vector<std::pair<Edge, int>> counts;
  auto bump = [&](int a, int b) {
    const Edge e = dotshape::make_edge(a, b);
    for (auto& [edge, c] : counts)
      if (edge == e) {
        ++c;
        return;
      }
    counts.push_back({e, 1});
  };
  for (const auto& t : g.triangles()) {
    if (!t.alive) continue;
    bump(t.v[0], t.v[1]);
    bump(t.v[1], t.v[2]);
    bump(t.v[0], t.v[2]);
  }
  std::vector<Edge> boundary;
  for (const auto& [edge, c] : counts) {
    CHECK((c == 1 || c == 2));
    if (c == 1) boundary.push_back(edge);
  }
  std::sort(boundary.begin(), boundary.end());
  CHECK(boundary == g.boundary_edges());
  CHECK(static_cast<int>(counts.size()) == g.alive_edge_count());
}
