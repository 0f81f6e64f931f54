#include "dotshape/pointset.hpp"

#include <fstream>

#include <json.hpp>

#include "dotshape/errors.hpp"

namespace dotshape {

using nlohmann::json;

PointSetFile pointset_from_sample(const SampledShape& sample) {
  PointSetFile ps;
  ps.source = sample.source;
  ps.k = sample.k;
  ps.points = sample.points;
  ps.truth_edges = sample.truth_edges;
  return ps;
}

PointSetFile read_pointset(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail(errc::io_failure, "cannot open '" + file.string() + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    fail(errc::malformed_file, file.string() + ": invalid JSON");
  if (!j.is_object() || !j.contains("k") || !j.contains("points") ||
      !j["k"].is_number_integer() || !j["points"].is_array())
    fail(errc::malformed_file,
         file.string() + ": expected an object with \"k\" and \"points\"");

  PointSetFile ps;
  if (j.contains("source") && j["source"].is_string())
    ps.source = j["source"].get<std::string>();
  ps.k = j["k"].get<int>();
  for (const auto& e : j["points"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      fail(errc::malformed_file,
           file.string() + ": points must be [x, y] pairs");
    ps.points.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  if (ps.k != static_cast<int>(ps.points.size()))
    fail(errc::malformed_file,
         file.string() + ": k does not match the number of points");
  if (j.contains("truth_edges") && !j["truth_edges"].is_null()) {
    if (!j["truth_edges"].is_array())
      fail(errc::malformed_file,
           file.string() + ": truth_edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["truth_edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        fail(errc::malformed_file,
             file.string() + ": truth_edges must be [i, j] pairs");
      const int a = e[0].get<int>();
      const int b = e[1].get<int>();
      if (a < 0 || b < 0 || a >= ps.k || b >= ps.k || a == b)
        fail(errc::malformed_file,
             file.string() + ": truth edge indices out of range");
      edges.push_back(make_edge(a, b));
    }
    ps.truth_edges = std::move(edges);
  }
  return ps;
}

void write_pointset(const PointSetFile& ps,
                    const std::filesystem::path& file) {
  json j;
  j["source"] = ps.source.has_value() ? json(*ps.source) : json(nullptr);
  j["k"] = ps.k;
  auto& pts = j["points"] = json::array();
  for (const auto& p : ps.points) pts.push_back({p.x, p.y});
  if (ps.truth_edges.has_value()) {
    auto& edges = j["truth_edges"] = json::array();
    for (const auto& [a, b] : *ps.truth_edges) edges.push_back({a, b});
  } else {
    j["truth_edges"] = nullptr;
  }
  std::ofstream out(file);
  if (!out) fail(errc::io_failure, "cannot write '" + file.string() + "'");
  out << j.dump(2) << '\n';
  if (!out) fail(errc::io_failure, "cannot write '" + file.string() + "'");
}

std::string grouping_record(const GroupingResult& result,
                            std::optional<double> xi) {
  json j;
  j["method"] = std::string(method_name(result.method));
  j["k"] = result.k;
  j["hamiltonian"] =
      result.method == Method::surface ? json(result.hamiltonian) : json(nullptr);
  j["xi"] = xi.has_value() ? json(*xi) : json(nullptr);
  auto& sel = j["selected_edges"] = json::array();
  for (const auto& [a, b] : result.selected_edges) sel.push_back({a, b});
  auto& boundary = j["boundary"] = json::array();
  for (const int v : result.boundary) boundary.push_back(v);
  auto& rem = j["removals"] = json::array();
  for (const auto& step : result.removals) {
    json r;
    r["edge"] = {step.edge.first, step.edge.second};
    r["opposite"] = step.opposite;
    r["flatness"] = step.flatness;
    rem.push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace dotshape
