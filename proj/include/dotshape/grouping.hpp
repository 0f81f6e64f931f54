#pragma once

#include <optional>
#include <queue>
#include <string_view>
#include <vector>

#include "dotshape/point.hpp"
#include "dotshape/triangulated_graph.hpp"

namespace dotshape {

enum class Method { mst, surface };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// One greedy removal: the popped boundary edge, the internal vertex exposed,
// and the edge's flatness at the time it was enqueued.
struct RemovalStep {
  Edge edge;
  int opposite = -1;
  double flatness = 0.0;
};

// Max-queue of boundary-edge candidates.  Priority: greater flatness, then
// greater edge length, then lexicographically smaller edge.  Entries are
// validated lazily by the caller when popped; each edge is pushed at most
// once because a boundary edge keeps its triangle until it disappears.
class RemovalQueue {
 public:
  struct Entry {
    double flatness = 0.0;
    double length = 0.0;
    Edge edge;
  };

  void push(const Entry& e) { heap_.push(e); }
  bool empty() const { return heap_.empty(); }
  size_t size() const { return heap_.size(); }
  Entry pop() {
    Entry top = heap_.top();
    heap_.pop();
    return top;
  }

 private:
  struct Lower {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.flatness != b.flatness) return a.flatness < b.flatness;
      if (a.length != b.length) return a.length < b.length;
      return a.edge > b.edge;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Lower> heap_;
};

struct GroupingResult {
  Method method = Method::surface;
  int k = 0;
  std::vector<Edge> selected_edges;  // canonical, sorted
  std::vector<int> boundary;         // surface only: CCW boundary cycle
  bool hamiltonian = false;          // surface only: boundary visits every dot
  std::vector<RemovalStep> removals; // surface only
};

// Triangulate, then greedily remove outer triangles (most protruding first)
// until no boundary edge is removable; the surviving boundary is the
// reconstructed shape.  Propagates triangulation errors.
GroupingResult group_surface(const std::vector<Point2>& pts);

// Same greedy loop, but stops once the flattest remaining candidate has
// flatness <= tau; keeps the surviving triangle surface (used for scene
// segmentation rather than single-shape recovery).  tau = +inf removes
// nothing; tau = 0 removes all positive-flatness candidates.
struct ThresholdedResult {
  TriangulatedGraph graph;
  std::vector<RemovalStep> removals;
};
ThresholdedResult group_surface_thresholded(const std::vector<Point2>& pts,
                                            double tau);

// Baseline: Euclidean minimum spanning tree (Kruskal over all pairs; ties by
// lexicographic edge).  Errors: too_few_points (< 2), bad_parameter.
GroupingResult group_mst(const std::vector<Point2>& pts);

// Fraction of selected edges that are true adjacencies: |sel n truth| / |sel|.
// Errors: empty_selection.
double grouping_score(const GroupingResult& result,
                      const std::vector<Edge>& truth_edges);

}  // namespace dotshape
