// Incremental Bowyer-Watson triangulation with a symbolic ghost vertex.
//
// The plane outside the current hull is covered by "ghost" triangles
// (hull edge + ghost vertex), so every edge always has exactly two incident
// triangles during construction and point insertion is a single cavity
// flood fill with no super-triangle coordinates to poison the arithmetic.
// A ghost (x, y, G) stores its hull edge so that the outside is the strict
// positive side of x->y; its "circumdisk" is that open half plane plus the
// open edge segment itself.
//
// Degeneracies: predicates compare normalized determinants against
// kPredicateEps.  Cocircular ties pick the diagonal whose smaller endpoint
// index is smaller, which keeps the result independent of floating-point
// noise and makes rebuilds bit-identical.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dotshape/errors.hpp"
#include "dotshape/predicates.hpp"
#include "dotshape/triangulated_graph.hpp"

namespace dotshape {

namespace {

constexpr int kGhost = -1;

struct CellHash {
  size_t operator()(const std::pair<std::int64_t, std::int64_t>& c) const {
    const std::uint64_t a = static_cast<std::uint64_t>(c.first);
    const std::uint64_t b = static_cast<std::uint64_t>(c.second);
    std::uint64_t h = a * 0x9e3779b97f4a7c15ULL;
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

void check_input(const std::vector<Point2>& pts) {
  if (pts.size() < 3)
    fail(errc::too_few_points, "need at least 3 points, got " +
                                   std::to_string(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i) {
    if (!is_finite(pts[i]))
      fail(errc::bad_parameter,
           "point " + std::to_string(i) + " has a non-finite coordinate");
    if (std::fabs(pts[i].x) > 1e12 || std::fabs(pts[i].y) > 1e12)
      fail(errc::bad_parameter,
           "point " + std::to_string(i) + " exceeds the supported magnitude");
  }

  // Spatial hash at the duplicate tolerance: near pairs share or touch cells.
  using Cell = std::pair<std::int64_t, std::int64_t>;
  std::unordered_map<Cell, std::vector<int>, CellHash> grid;
  grid.reserve(pts.size() * 2);
  const double inv = 1.0 / kDuplicateTolerance;
  const double tol2 = kDuplicateTolerance * kDuplicateTolerance;
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto cx = static_cast<std::int64_t>(std::floor(pts[i].x * inv));
    const auto cy = static_cast<std::int64_t>(std::floor(pts[i].y * inv));
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = grid.find({cx + dx, cy + dy});
        if (it == grid.end()) continue;
        for (const int j : it->second)
          if (sq_dist(pts[i], pts[static_cast<size_t>(j)]) < tol2)
            fail(errc::duplicate_points,
                 "points " + std::to_string(j) + " and " + std::to_string(i) +
                     " are closer than the duplicate tolerance");
      }
    grid[{cx, cy}].push_back(static_cast<int>(i));
  }
}

}  // namespace

class DelaunayBuilder {
 public:
  explicit DelaunayBuilder(const std::vector<Point2>& pts) {
    g_.points_ = pts;
  }

  TriangulatedGraph build() {
    check_input(g_.points_);
    const auto& p = g_.points_;
    const int n = static_cast<int>(p.size());

    int third = -1;
    for (int j = 2; j < n; ++j)
      if (std::fabs(orient_norm(p[0], p[1], p[static_cast<size_t>(j)])) >
          kPredicateEps) {
        third = j;
        break;
      }
    if (third < 0)
      fail(errc::degenerate_input,
           "all points are collinear within tolerance");

    int a = 0, b = 1;
    if (orient_norm(p[0], p[1], p[static_cast<size_t>(third)]) < 0.0)
      std::swap(a, b);
    const int t0 = create_tri(a, b, third);
    create_tri(b, a, kGhost);
    create_tri(third, b, kGhost);
    create_tri(a, third, kGhost);
    last_finite_ = t0;

    for (int j = 2; j < n; ++j) {
      if (j == third) continue;
      insert(j);
    }
    finalize();
    return std::move(g_);
  }

 private:
  bool is_ghost(int t) const {
    return g_.triangles_[static_cast<size_t>(t)].v[2] == kGhost;
  }

  int create_tri(int v0, int v1, int v2) {
    std::array<int, 3> v = {v0, v1, v2};
    if (v[0] == kGhost) v = {v[1], v[2], v[0]};
    else if (v[1] == kGhost) v = {v[2], v[0], v[1]};
    const int id = static_cast<int>(g_.triangles_.size());
    g_.triangles_.push_back({v, true});
    eval_stamp_.push_back(0);
    push_stamp_.push_back(0);
    bad_flag_.push_back(0);
    for (int e = 0; e < 3; ++e) {
      auto [it, fresh] = g_.edges_.try_emplace(
          TriangulatedGraph::edge_key(v[static_cast<size_t>(e)],
                                      v[static_cast<size_t>((e + 1) % 3)]),
          std::array<int, 2>{-1, -1});
      auto& slot = it->second;
      if (slot[0] < 0)
        slot[0] = id;
      else if (slot[1] < 0)
        slot[1] = id;
      else
        throw std::logic_error("edge already has two triangles");
    }
    return id;
  }

  void kill_tri(int t) {
    auto& tri = g_.triangles_[static_cast<size_t>(t)];
    tri.alive = false;
    for (int e = 0; e < 3; ++e) {
      const auto key = TriangulatedGraph::edge_key(
          tri.v[static_cast<size_t>(e)], tri.v[static_cast<size_t>((e + 1) % 3)]);
      auto it = g_.edges_.find(key);
      auto& slot = it->second;
      if (slot[0] == t) slot[0] = slot[1];
      slot[1] = -1;
      if (slot[0] < 0) g_.edges_.erase(it);
    }
  }

  int neighbor_of(int t, int x, int y) const {
    const auto& slot = g_.edges_.at(TriangulatedGraph::edge_key(x, y));
    return slot[0] == t ? slot[1] : slot[0];
  }

  // Is triangle t's circumdisk (half plane for ghosts) considered to contain
  // point pi?  Cached per insertion epoch.
  bool eval_bad(int t, Point2 q, int pi) {
    if (eval_stamp_[static_cast<size_t>(t)] == epoch_)
      return bad_flag_[static_cast<size_t>(t)] != 0;
    eval_stamp_[static_cast<size_t>(t)] = epoch_;
    const auto& tri = g_.triangles_[static_cast<size_t>(t)].v;
    const auto& p = g_.points_;
    bool bad = false;
    if (tri[2] == kGhost) {
      const Point2 x = p[static_cast<size_t>(tri[0])];
      const Point2 y = p[static_cast<size_t>(tri[1])];
      const double o = orient_norm(x, y, q);
      if (o > kPredicateEps) {
        bad = true;
      } else if (o >= -kPredicateEps) {
        // Collinear with the hull edge: inside only within the open segment.
        bad = dot(q - x, y - x) > 0.0 && dot(q - y, x - y) > 0.0;
      }
    } else {
      const Point2 ta = p[static_cast<size_t>(tri[0])];
      const Point2 tb = p[static_cast<size_t>(tri[1])];
      const Point2 tc = p[static_cast<size_t>(tri[2])];
      const double det = in_circle_norm(ta, tb, tc, q);
      if (det > kPredicateEps) {
        bad = true;
      } else if (det >= -kPredicateEps) {
        // Cocircular tie.  Find the edge facing q; flipping that edge would
        // replace diagonal (u, v) by (w, pi), and the tie rule prefers the
        // diagonal whose smaller endpoint index is smaller.
        const double o01 = orient_norm(ta, tb, q);
        const double o12 = orient_norm(tb, tc, q);
        const double o20 = orient_norm(tc, ta, q);
        if (std::min(o01, std::min(o12, o20)) >= -kPredicateEps) {
          bad = true;  // q inside (or on) the triangle itself
        } else {
          int u, v, w;
          if (o01 <= o12 && o01 <= o20) {
            u = tri[0], v = tri[1], w = tri[2];
          } else if (o12 <= o01 && o12 <= o20) {
            u = tri[1], v = tri[2], w = tri[0];
          } else {
            u = tri[2], v = tri[0], w = tri[1];
          }
          bad = std::min(w, pi) < std::min(u, v);
        }
      }
    }
    bad_flag_[static_cast<size_t>(t)] = bad ? 1 : 0;
    return bad;
  }

  int first_alive() const {
    for (size_t t = 0; t < g_.triangles_.size(); ++t)
      if (g_.triangles_[t].alive) return static_cast<int>(t);
    throw std::logic_error("no alive triangle");
  }

  // Find one triangle whose disk contains q: visibility walk from the last
  // created finite triangle, with a deterministic linear-scan fallback for
  // heavily degenerate configurations.
  int locate_bad(Point2 q, int pi) {
    int cur = last_finite_;
    if (cur < 0 || !g_.triangles_[static_cast<size_t>(cur)].alive)
      cur = first_alive();
    const int cap = 4 * static_cast<int>(g_.triangles_.size()) + 64;
    const auto& p = g_.points_;
    for (int step = 0; step < cap; ++step) {
      const auto& tri = g_.triangles_[static_cast<size_t>(cur)].v;
      if (tri[2] == kGhost) {
        if (eval_bad(cur, q, pi)) return cur;
        const Point2 x = p[static_cast<size_t>(tri[0])];
        const Point2 y = p[static_cast<size_t>(tri[1])];
        if (dot(q - y, y - x) > 0.0)
          cur = neighbor_of(cur, tri[1], kGhost);
        else if (dot(q - x, x - y) > 0.0)
          cur = neighbor_of(cur, tri[0], kGhost);
        else
          cur = neighbor_of(cur, tri[0], tri[1]);
        continue;
      }
      const Point2 ta = p[static_cast<size_t>(tri[0])];
      const Point2 tb = p[static_cast<size_t>(tri[1])];
      const Point2 tc = p[static_cast<size_t>(tri[2])];
      const double o01 = orient_norm(ta, tb, q);
      const double o12 = orient_norm(tb, tc, q);
      const double o20 = orient_norm(tc, ta, q);
      if (o01 >= -kPredicateEps && o12 >= -kPredicateEps &&
          o20 >= -kPredicateEps) {
        if (eval_bad(cur, q, pi)) return cur;
        break;  // containment is ambiguous at tolerance; fall back to scan
      }
      if (o01 <= o12 && o01 <= o20)
        cur = neighbor_of(cur, tri[0], tri[1]);
      else if (o12 <= o01 && o12 <= o20)
        cur = neighbor_of(cur, tri[1], tri[2]);
      else
        cur = neighbor_of(cur, tri[2], tri[0]);
    }
    for (size_t t = 0; t < g_.triangles_.size(); ++t)
      if (g_.triangles_[t].alive && eval_bad(static_cast<int>(t), q, pi))
        return static_cast<int>(t);
    throw std::logic_error("insertion found no cavity");
  }

  void insert(int pi) {
    const Point2 q = g_.points_[static_cast<size_t>(pi)];
    ++epoch_;
    const int seed = locate_bad(q, pi);

    bad_list_.clear();
    stack_.clear();
    bad_list_.push_back(seed);
    stack_.push_back(seed);
    push_stamp_[static_cast<size_t>(seed)] = epoch_;
    while (!stack_.empty()) {
      const int t = stack_.back();
      stack_.pop_back();
      const auto tri = g_.triangles_[static_cast<size_t>(t)].v;
      for (int e = 0; e < 3; ++e) {
        const int nb = neighbor_of(t, tri[static_cast<size_t>(e)],
                                   tri[static_cast<size_t>((e + 1) % 3)]);
        if (push_stamp_[static_cast<size_t>(nb)] == epoch_) continue;
        if (eval_bad(nb, q, pi)) {
          push_stamp_[static_cast<size_t>(nb)] = epoch_;
          bad_list_.push_back(nb);
          stack_.push_back(nb);
        }
      }
    }

    cavity_.clear();
    for (const int t : bad_list_) {
      const auto tri = g_.triangles_[static_cast<size_t>(t)].v;
      for (int e = 0; e < 3; ++e) {
        const int u = tri[static_cast<size_t>(e)];
        const int v = tri[static_cast<size_t>((e + 1) % 3)];
        const int nb = neighbor_of(t, u, v);
        if (push_stamp_[static_cast<size_t>(nb)] != epoch_)
          cavity_.push_back({u, v});
      }
    }
    for (const int t : bad_list_) kill_tri(t);
    for (const auto& [u, v] : cavity_) {
      const int id = create_tri(u, v, pi);
      if (!is_ghost(id)) last_finite_ = id;
    }
  }

  void finalize() {
    std::vector<TriangulatedGraph::Triangle> kept;
    for (const auto& tri : g_.triangles_) {
      if (!tri.alive || tri.v[2] == kGhost) continue;
      auto v = tri.v;
      if (v[1] < v[0] && v[1] < v[2]) v = {v[1], v[2], v[0]};
      else if (v[2] < v[0] && v[2] < v[1]) v = {v[2], v[0], v[1]};
      kept.push_back({v, true});
    }
    g_.triangles_ = std::move(kept);

    g_.edges_.clear();
    for (size_t t = 0; t < g_.triangles_.size(); ++t) {
      const auto& v = g_.triangles_[t].v;
      for (int e = 0; e < 3; ++e) {
        auto [it, fresh] = g_.edges_.try_emplace(
            TriangulatedGraph::edge_key(v[static_cast<size_t>(e)],
                                        v[static_cast<size_t>((e + 1) % 3)]),
            std::array<int, 2>{-1, -1});
        auto& slot = it->second;
        if (slot[0] < 0) slot[0] = static_cast<int>(t);
        else slot[1] = static_cast<int>(t);
      }
    }

    g_.boundary_.assign(g_.points_.size(), 0);
    for (const auto& [key, slot] : g_.edges_) {
      if (slot[1] >= 0) continue;
      const int x = static_cast<int>(key >> 32) - 1;
      const int y = static_cast<int>(key & 0xffffffffu) - 1;
      g_.boundary_[static_cast<size_t>(x)] = 1;
      g_.boundary_[static_cast<size_t>(y)] = 1;
    }

    g_.alive_tris_ = static_cast<int>(g_.triangles_.size());
    g_.alive_edges_ = static_cast<int>(g_.edges_.size());
    g_.boundary_count_ = 0;
    for (const char f : g_.boundary_) g_.boundary_count_ += f;
    g_.hull_count_ = g_.boundary_count_;
    g_.removed_ = 0;

    const int k = g_.vertex_count();
    const int h = g_.hull_count_;
    if (g_.alive_tris_ != 2 * k - h - 2 || g_.alive_edges_ != 3 * k - h - 3)
      throw std::logic_error("triangulation violates the Euler counts");
  }

  TriangulatedGraph g_;
  std::vector<int> eval_stamp_;
  std::vector<int> push_stamp_;
  std::vector<char> bad_flag_;
  std::vector<int> bad_list_;
  std::vector<int> stack_;
  std::vector<std::array<int, 2>> cavity_;
  int epoch_ = 0;
  int last_finite_ = -1;
};

TriangulatedGraph delaunay(const std::vector<Point2>& pts) {
  return DelaunayBuilder(pts).build();
}

}  // namespace dotshape
