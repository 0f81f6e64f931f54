#include "dotshape/triangulated_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "dotshape/errors.hpp"

namespace dotshape {

std::uint64_t TriangulatedGraph::edge_key(int x, int y) {
  // +1 so the builder's ghost vertex (-1) packs too.
  const auto lo = static_cast<std::uint32_t>(std::min(x, y) + 1);
  const auto hi = static_cast<std::uint32_t>(std::max(x, y) + 1);
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

const std::array<int, 2>* TriangulatedGraph::find_slot(int x, int y) const {
  const auto it = edges_.find(edge_key(x, y));
  return it == edges_.end() ? nullptr : &it->second;
}

bool TriangulatedGraph::has_edge(int x, int y) const {
  return find_slot(x, y) != nullptr;
}

bool TriangulatedGraph::is_boundary_edge(int x, int y) const {
  const auto* s = find_slot(x, y);
  return s != nullptr && (*s)[1] < 0;
}

int TriangulatedGraph::opposite_vertex(int x, int y) const {
  const auto* s = find_slot(x, y);
  if (s == nullptr || (*s)[1] >= 0)
    fail(errc::not_boundary_edge, "edge (" + std::to_string(x) + ", " +
                                      std::to_string(y) +
                                      ") is not a boundary edge");
  for (const int v : triangles_[static_cast<size_t>((*s)[0])].v)
    if (v != x && v != y) return v;
  throw std::logic_error("triangle does not contain its own edge");
}

double TriangulatedGraph::flatness(int x, int y) const {
  const int w = opposite_vertex(x, y);
  const auto& p = points_;
  const auto sx = static_cast<size_t>(x);
  const auto sy = static_cast<size_t>(y);
  const auto sw = static_cast<size_t>(w);
  const double exy = dist(p[sx], p[sy]);
  const double exw = dist(p[sx], p[sw]);
  const double eyw = dist(p[sy], p[sw]);
  return exy - std::min(exy, std::min(exw, eyw));
}

bool TriangulatedGraph::is_removable(int x, int y) const {
  if (!is_boundary_edge(x, y)) return false;
  return !on_boundary(opposite_vertex(x, y));
}

std::pair<Edge, Edge> TriangulatedGraph::remove_triangle(int x, int y) {
  const auto it = edges_.find(edge_key(x, y));
  if (it == edges_.end() || it->second[1] >= 0)
    fail(errc::not_boundary_edge, "edge (" + std::to_string(x) + ", " +
                                      std::to_string(y) +
                                      ") is not a boundary edge");
  const int t = it->second[0];
  int w = -1;
  for (const int v : triangles_[static_cast<size_t>(t)].v)
    if (v != x && v != y) w = v;
  if (on_boundary(w))
    fail(errc::not_removable,
         "opposite vertex " + std::to_string(w) + " is already on the boundary");

  triangles_[static_cast<size_t>(t)].alive = false;
  ++removed_;
  --alive_tris_;
  edges_.erase(it);
  --alive_edges_;
  for (const int u : {x, y}) {
    auto& slot = edges_.at(edge_key(u, w));
    if (slot[0] == t) slot[0] = slot[1];
    slot[1] = -1;
  }
  boundary_[static_cast<size_t>(w)] = 1;
  ++boundary_count_;
  return {make_edge(x, w), make_edge(y, w)};
}

std::vector<Edge> TriangulatedGraph::boundary_edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(boundary_count_));
  for (const auto& t : triangles_) {
    if (!t.alive) continue;
    for (int e = 0; e < 3; ++e) {
      const int a = t.v[static_cast<size_t>(e)];
      const int b = t.v[static_cast<size_t>((e + 1) % 3)];
      const auto* s = find_slot(a, b);
      if (s != nullptr && (*s)[1] < 0) out.push_back(make_edge(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> TriangulatedGraph::boundary_sequence() const {
  const auto edges = boundary_edges();
  // Each boundary vertex has exactly two boundary neighbours (simple cycle).
  std::vector<std::array<int, 2>> adj(points_.size(), {-1, -1});
  for (const auto& [a, b] : edges) {
    auto push = [&adj](int u, int v) {
      auto& slots = adj[static_cast<size_t>(u)];
      if (slots[0] < 0)
        slots[0] = v;
      else if (slots[1] < 0)
        slots[1] = v;
      else
        throw std::logic_error("boundary vertex with more than two neighbours");
    };
    push(a, b);
    push(b, a);
  }

  int start = -1;
  for (size_t v = 0; v < points_.size(); ++v)
    if (boundary_[v] != 0) {
      start = static_cast<int>(v);
      break;
    }
  if (start < 0) throw std::logic_error("graph has no boundary");

  std::vector<int> seq;
  seq.reserve(static_cast<size_t>(boundary_count_));
  seq.push_back(start);
  int prev = start;
  int cur = std::min(adj[static_cast<size_t>(start)][0],
                     adj[static_cast<size_t>(start)][1]);
  while (cur != start) {
    seq.push_back(cur);
    const auto& n = adj[static_cast<size_t>(cur)];
    const int nxt = (n[0] == prev) ? n[1] : n[0];
    prev = cur;
    cur = nxt;
    if (seq.size() > points_.size())
      throw std::logic_error("boundary is not a single cycle");
  }
  if (static_cast<int>(seq.size()) != boundary_count_)
    throw std::logic_error("boundary is not a single cycle");

  double area2 = 0.0;
  for (size_t i = 0; i < seq.size(); ++i) {
    const Point2 a = points_[static_cast<size_t>(seq[i])];
    const Point2 b = points_[static_cast<size_t>(seq[(i + 1) % seq.size()])];
    area2 += cross(a, b);
  }
  if (area2 < 0.0) std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

}  // namespace dotshape
