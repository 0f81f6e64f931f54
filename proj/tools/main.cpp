// dotshape: reconstruct and score shape boundaries from dot stimuli.
//
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 geometry error.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dotshape/errors.hpp"
#include "dotshape/grouping.hpp"
#include "dotshape/pointset.hpp"
#include "dotshape/retrieval.hpp"
#include "dotshape/shape_db.hpp"
#include "dotshape/shapes.hpp"
#include "dotshape/svg.hpp"
#include "dotshape/sweep.hpp"

namespace {

using namespace dotshape;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitGeometry = 4;

int exit_code_for(errc code) {
  switch (code) {
    case errc::k_too_small:
    case errc::k_exceeds_outline:
    case errc::bad_parameter:
    case errc::unknown_shape:
      return kExitUsage;
    case errc::io_failure:
    case errc::malformed_file:
    case errc::duplicate_name:
      return kExitIo;
    default:
      return kExitGeometry;
  }
}

// --shape accepts "builtin:NAME" or a path to a shape JSON file.
DenseOutline resolve_shape(const std::string& src) {
  constexpr std::string_view prefix = "builtin:";
  if (src.rfind(prefix, 0) == 0) {
    const auto kind = builtin_from_name(src.substr(prefix.size()));
    if (!kind.has_value())
      fail(errc::unknown_shape, "unknown builtin shape '" +
                                    src.substr(prefix.size()) + "'");
    return builtin_shape(*kind);
  }
  return load_shape_file(src).outline;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_failure, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(errc::io_failure, "cannot write '" + path + "'");
}

int cmd_sample(const std::string& shape, int k, const std::string& out) {
  const DenseOutline outline = resolve_shape(shape);
  write_pointset(pointset_from_sample(sample_uniform(outline, k)), out);
  return 0;
}

int cmd_group(const std::string& points_file, const std::string& method_str,
              std::optional<double> stop_flatness, const std::string& out) {
  const auto method = method_from_name(method_str);
  if (!method.has_value())
    fail(errc::bad_parameter, "unknown method '" + method_str + "'");
  if (stop_flatness.has_value() && *method != Method::surface)
    fail(errc::bad_parameter, "--stop-flatness requires --method surface");
  if (stop_flatness.has_value() && !(*stop_flatness >= 0.0))
    fail(errc::bad_parameter, "--stop-flatness must be non-negative");

  const PointSetFile ps = read_pointset(points_file);
  GroupingResult result;
  if (*method == Method::mst) {
    result = group_mst(ps.points);
  } else if (!stop_flatness.has_value()) {
    result = group_surface(ps.points);
  } else {
    ThresholdedResult tr = group_surface_thresholded(ps.points, *stop_flatness);
    result.method = Method::surface;
    result.k = static_cast<int>(ps.points.size());
    result.removals = std::move(tr.removals);
    result.boundary = tr.graph.boundary_sequence();
    for (size_t i = 0; i < result.boundary.size(); ++i)
      result.selected_edges.push_back(
          make_edge(result.boundary[i],
                    result.boundary[(i + 1) % result.boundary.size()]));
    std::sort(result.selected_edges.begin(), result.selected_edges.end());
    result.hamiltonian = result.boundary.size() == ps.points.size();
  }

  std::optional<double> xi;
  if (ps.truth_edges.has_value()) {
    xi = grouping_score(result, *ps.truth_edges);
    std::printf("xi=%.6f\n", *xi);
  }
  write_text(out, grouping_record(result, xi));
  return 0;
}

int cmd_sweep_run(const std::string& db_dir, const std::string& methods_csv,
                  int kmin, int kmax, int kstep, int cap, bool timing,
                  const std::string& out) {
  SweepOptions opts;
  opts.methods.clear();
  std::stringstream ss(methods_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = method_from_name(item);
    if (!m.has_value())
      fail(errc::bad_parameter, "unknown method '" + item + "'");
    opts.methods.push_back(*m);
  }
  opts.kmin = kmin;
  opts.kmax = kmax;
  opts.kstep = kstep;
  opts.retrieval_cap = cap;
  opts.timing = timing;
  const ShapeDb db = load_db(db_dir);
  write_text(out, run_sweep(db, opts));
  return 0;
}

int cmd_retrieve_run(const std::string& db_dir, const std::string& id, int cap,
                     const std::string& log_file) {
  const ShapeDb db = load_db(db_dir);
  const RetrievalResult result = retrieve(db, id, cap);
  if (!log_file.empty()) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : result.steps) {
      nlohmann::json j;
      j["n"] = s.n;
      j["skipped"] = s.skipped;
      j["best"] = s.best;
      j["identity_ok"] = s.identity_ok;
      j["margin_ok"] = s.margin_ok;
      auto& d = j["distances"] = nlohmann::json::array();
      for (const auto& [name, value] : s.distances)
        d.push_back({{"shape", name}, {"distance", value}});
      steps.push_back(std::move(j));
    }
    write_text(log_file, steps.dump(2) + "\n");
  }
  if (result.success)
    std::printf("n=%d\n", result.n);
  else
    std::printf("NO-TERMINATION\n");
  return 0;
}

int cmd_render(const std::string& points_file, const std::string& shape,
               int k, const std::string& mode, const std::string& out) {
  std::vector<Point2> pts;
  std::optional<DenseOutline> outline;
  if (!points_file.empty()) {
    pts = read_pointset(points_file).points;
  } else {
    outline = resolve_shape(shape);
    pts = sample_uniform(*outline, k).points;
  }

  std::string svg_text;
  if (mode == "points") {
    svg_text = svg::render_points(pts);
  } else if (mode == "all-triangles") {
    svg_text = svg::render_triangulation(delaunay(pts));
  } else if (mode == "triangles") {
    if (!outline.has_value())
      fail(errc::bad_parameter,
           "--mode triangles needs --shape (a dense outline for inside tests)");
    svg_text = svg::render_triangles_inside(delaunay(pts), *outline);
  } else if (mode == "grouping") {
    svg_text = svg::render_grouping(pts, group_surface(pts));
  } else {
    fail(errc::bad_parameter, "unknown mode '" + mode + "'");
  }
  write_text(out, svg_text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shape boundary reconstruction from dot stimuli"};
  app.require_subcommand(1);

  std::string shape, points_file, method = "surface", mode, out, db_dir, id;
  std::string methods_csv = "surface,mst", log_file;
  int k = 0, kmin = 10, kmax = 200, kstep = 10, cap = 500;
  bool timing = false;
  double stop_flatness = 0.0;

  auto* sample = app.add_subcommand("sample", "sample K dots from a shape");
  sample->add_option("--shape", shape, "builtin:NAME or shape JSON file")
      ->required();
  sample->add_option("--k", k, "number of dots")->required();
  sample->add_option("--out", out, "output point-set file")->required();

  auto* group = app.add_subcommand("group", "group dots into a boundary");
  group->add_option("--points", points_file, "point-set file")->required();
  group->add_option("--method", method, "surface|mst");
  auto* stop_opt =
      group->add_option("--stop-flatness", stop_flatness,
                        "stop removing at this flatness (surface only)");
  group->add_option("--out", out, "output record file")->required();

  auto* sweep = app.add_subcommand("sweep", "full K-sweep over a shape db");
  sweep->add_option("--db", db_dir, "shape database directory")->required();
  sweep->add_option("--methods", methods_csv, "comma-separated methods");
  sweep->add_option("--kmin", kmin);
  sweep->add_option("--kmax", kmax);
  sweep->add_option("--kstep", kstep);
  sweep->add_option("--cap", cap, "retrieval sample budget");
  sweep->add_flag("--timing", timing, "record real runtimes");
  sweep->add_option("--out", out, "output CSV file")->required();

  auto* retrieve = app.add_subcommand("retrieve", "find the retrievable n");
  retrieve->add_option("--db", db_dir, "shape database directory")->required();
  retrieve->add_option("--id", id, "shape name")->required();
  retrieve->add_option("--cap", cap, "sample budget");
  retrieve->add_option("--log", log_file, "step log file");

  auto* render = app.add_subcommand("render", "render an SVG stimulus");
  auto* render_points_opt =
      render->add_option("--points", points_file, "point-set file");
  auto* render_shape_opt =
      render->add_option("--shape", shape, "builtin:NAME or shape JSON file");
  render->add_option("--k", k, "number of dots (with --shape)");
  render->add_option("--mode", mode, "points|all-triangles|triangles|grouping")
      ->required();
  render->add_option("--out", out, "output SVG file")->required();
  render_points_opt->excludes(render_shape_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (sample->parsed()) return cmd_sample(shape, k, out);
    if (group->parsed()) {
      std::optional<double> tau;
      if (stop_opt->count() > 0) tau = stop_flatness;
      return cmd_group(points_file, method, tau, out);
    }
    if (sweep->parsed())
      return cmd_sweep_run(db_dir, methods_csv, kmin, kmax, kstep, cap,
                           timing, out);
    if (retrieve->parsed()) return cmd_retrieve_run(db_dir, id, cap, log_file);
    if (render->parsed()) {
      if (points_file.empty() && shape.empty())
        fail(errc::bad_parameter, "render needs --points or --shape");
      if (!shape.empty() && render->count("--k") == 0)
        fail(errc::bad_parameter, "--shape rendering needs --k");
      return cmd_render(points_file, shape, k, mode, out);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s [%s]\n", e.what(), errc_name(e.code()));
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return kExitUsage;
}
