#include "dotshape/grouping.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

#include "dotshape/errors.hpp"
#include "dotshape/kernels.hpp"

namespace dotshape {

std::string_view method_name(Method m) {
  return m == Method::surface ? "surface" : "mst";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "surface") return Method::surface;
  if (name == "mst") return Method::mst;
  return std::nullopt;
}

namespace {

RemovalQueue::Entry entry_for(const TriangulatedGraph& g, Edge e) {
  return {g.flatness(e.first, e.second),
          dist(g.points()[static_cast<size_t>(e.first)],
               g.points()[static_cast<size_t>(e.second)]),
          e};
}

// Shared greedy loop.  Removes the currently flattest removable boundary
// edge's triangle while that flatness exceeds tau; each newly exposed edge
// is enqueued once, stale entries are discarded when popped.
std::vector<RemovalStep> greedy_removal(TriangulatedGraph& g, double tau) {
  RemovalQueue queue;
  for (const Edge& e : g.boundary_edges())
    if (g.is_removable(e.first, e.second)) queue.push(entry_for(g, e));

  std::vector<RemovalStep> removals;
  while (!queue.empty()) {
    const auto top = queue.pop();
    const auto [x, y] = top.edge;
    if (!g.is_removable(x, y)) continue;
    // The queue pops in priority order and holds every removable boundary
    // edge, so the first valid entry is the flattest candidate overall.
    if (!(top.flatness > tau)) break;
    const int w = g.opposite_vertex(x, y);
    const auto [e1, e2] = g.remove_triangle(x, y);
    removals.push_back({top.edge, w, top.flatness});
    queue.push(entry_for(g, e1));
    queue.push(entry_for(g, e2));
  }
  return removals;
}

}  // namespace

GroupingResult group_surface(const std::vector<Point2>& pts) {
  TriangulatedGraph g = delaunay(pts);
  GroupingResult out;
  out.method = Method::surface;
  out.k = static_cast<int>(pts.size());
  out.removals = greedy_removal(g, -1.0);  // flatness >= 0: no threshold
  out.boundary = g.boundary_sequence();
  out.selected_edges.reserve(out.boundary.size());
  for (size_t i = 0; i < out.boundary.size(); ++i)
    out.selected_edges.push_back(make_edge(
        out.boundary[i], out.boundary[(i + 1) % out.boundary.size()]));
  std::sort(out.selected_edges.begin(), out.selected_edges.end());
  out.hamiltonian = out.boundary.size() == pts.size();
  return out;
}

ThresholdedResult group_surface_thresholded(const std::vector<Point2>& pts,
                                            double tau) {
  ThresholdedResult out{delaunay(pts), {}};
  out.removals = greedy_removal(out.graph, tau);
  return out;
}

GroupingResult group_mst(const std::vector<Point2>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 2)
    fail(errc::too_few_points, "minimum spanning tree needs at least 2 points");
  for (size_t i = 0; i < pts.size(); ++i)
    if (!is_finite(pts[i]))
      fail(errc::bad_parameter,
           "point " + std::to_string(i) + " has a non-finite coordinate");

  std::vector<double> xs(pts.size()), ys(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    xs[i] = pts[i].x;
    ys[i] = pts[i].y;
  }

  struct WeightedEdge {
    double w2;
    int a, b;
  };
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2);
  std::vector<double> row(pts.size());
  for (int i = 0; i + 1 < n; ++i) {
    const size_t rest = pts.size() - static_cast<size_t>(i) - 1;
    kernels::point_sq_dists(xs.data() + i + 1, ys.data() + i + 1, rest,
                            xs[static_cast<size_t>(i)],
                            ys[static_cast<size_t>(i)], row.data());
    for (size_t j = 0; j < rest; ++j)
      edges.push_back({row[j], i, i + 1 + static_cast<int>(j)});
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& l, const WeightedEdge& r) {
              if (l.w2 != r.w2) return l.w2 < r.w2;
              if (l.a != r.a) return l.a < r.a;
              return l.b < r.b;
            });

  std::vector<int> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> size(pts.size(), 1);
  auto find = [&parent](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };

  GroupingResult out;
  out.method = Method::mst;
  out.k = n;
  out.selected_edges.reserve(static_cast<size_t>(n) - 1);
  for (const auto& e : edges) {
    const int ra = find(e.a);
    const int rb = find(e.b);
    if (ra == rb) continue;
    if (size[static_cast<size_t>(ra)] < size[static_cast<size_t>(rb)]) {
      parent[static_cast<size_t>(ra)] = rb;
      size[static_cast<size_t>(rb)] += size[static_cast<size_t>(ra)];
    } else {
      parent[static_cast<size_t>(rb)] = ra;
      size[static_cast<size_t>(ra)] += size[static_cast<size_t>(rb)];
    }
    out.selected_edges.push_back(make_edge(e.a, e.b));
    if (static_cast<int>(out.selected_edges.size()) == n - 1) break;
  }
  std::sort(out.selected_edges.begin(), out.selected_edges.end());
  return out;
}

double grouping_score(const GroupingResult& result,
                      const std::vector<Edge>& truth_edges) {
  if (result.selected_edges.empty())
    fail(errc::empty_selection, "grouping selected no edges");
  std::set<Edge> truth;
  for (const Edge& e : truth_edges) truth.insert(make_edge(e.first, e.second));
  size_t hits = 0;
  for (const Edge& e : result.selected_edges) hits += truth.count(e);
  return static_cast<double>(hits) /
         static_cast<double>(result.selected_edges.size());
}

}  // namespace dotshape
