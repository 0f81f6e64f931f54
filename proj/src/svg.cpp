#include "dotshape/svg.hpp"

#include <sstream>

#include "dotshape/polygon.hpp"

namespace dotshape::svg {

namespace {

std::ostream& open_document(std::ostream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kCanvas
     << ' ' << kCanvas << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\""
     << kCanvas << "\" fill=\"" << kBackground << "\"/>\n";
  return os;
}

void write_dots(std::ostream& os, std::span<const Point2> pts) {
  for (const auto& p : pts)
    os << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\""
       << kDotRadius << "\" fill=\"" << kDotFill << "\"/>\n";
}

void write_triangle(std::ostream& os, const Point2& a, const Point2& b,
                    const Point2& c) {
  os << "  <polygon points=\"" << a.x << ',' << a.y << ' ' << b.x << ',' << b.y
     << ' ' << c.x << ',' << c.y << "\" fill=\"" << kTriangleFill
     << "\" stroke=\"" << kTriangleStroke << "\"/>\n";
}

}  // namespace

std::string render_points(std::span<const Point2> pts) {
  std::ostringstream os;
  open_document(os);
  write_dots(os, pts);
  os << "</svg>\n";
  return os.str();
}

std::string render_triangulation(const TriangulatedGraph& g) {
  std::ostringstream os;
  open_document(os);
  const auto& pts = g.points();
  for (const auto& t : g.triangles()) {
    if (!t.alive) continue;
    write_triangle(os, pts[static_cast<size_t>(t.v[0])],
                   pts[static_cast<size_t>(t.v[1])],
                   pts[static_cast<size_t>(t.v[2])]);
  }
  write_dots(os, pts);
  os << "</svg>\n";
  return os.str();
}

std::string render_triangles_inside(const TriangulatedGraph& g,
                                    const DenseOutline& outline) {
  std::ostringstream os;
  open_document(os);
  const auto& pts = g.points();
  for (const auto& t : g.triangles()) {
    if (!t.alive) continue;
    const Point2 a = pts[static_cast<size_t>(t.v[0])];
    const Point2 b = pts[static_cast<size_t>(t.v[1])];
    const Point2 c = pts[static_cast<size_t>(t.v[2])];
    const Point2 centroid = {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
    if (point_in_polygon(centroid, outline.points)) write_triangle(os, a, b, c);
  }
  write_dots(os, pts);
  os << "</svg>\n";
  return os.str();
}

std::string render_grouping(std::span<const Point2> pts,
                            const GroupingResult& result) {
  std::ostringstream os;
  open_document(os);
  write_dots(os, pts);
  for (const auto& [a, b] : result.selected_edges)
    os << "  <line x1=\"" << pts[static_cast<size_t>(a)].x << "\" y1=\""
       << pts[static_cast<size_t>(a)].y << "\" x2=\""
       << pts[static_cast<size_t>(b)].x << "\" y2=\""
       << pts[static_cast<size_t>(b)].y << "\" stroke=\"" << kEdgeStroke
       << "\" stroke-width=\"3\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace dotshape::svg
