#include "dotshape/shape_db.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

#include "dotshape/errors.hpp"

namespace dotshape {

namespace fs = std::filesystem;
using nlohmann::json;

const ShapeRecord* find_shape(const ShapeDb& db, std::string_view name) {
  for (const auto& s : db.shapes)
    if (s.outline.name == name) return &s;
  return nullptr;
}

namespace {

bool safe_name(std::string_view name) {
  if (name.empty() || name.size() > 128) return false;
  for (const char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '-' || c == '.'))
      return false;
  return name != "." && name != "..";
}

ShapeRecord parse_shape(const json& j, const std::string& file) {
  if (!j.is_object() || !j.contains("name") || !j.contains("points") ||
      !j["name"].is_string() || !j["points"].is_array())
    fail(errc::malformed_file,
         file + ": expected an object with \"name\" and \"points\"");

  std::vector<Point2> pts;
  pts.reserve(j["points"].size());
  for (const auto& e : j["points"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      fail(errc::malformed_file, file + ": points must be [x, y] pairs");
    pts.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  if (auto problem = outline_problem(pts))
    fail(errc::malformed_file, file + ": " + *problem);

  ShapeRecord rec;
  rec.outline = {j["name"].get<std::string>(), std::move(pts)};
  if (j.contains("descriptor")) {
    const auto& d = j["descriptor"];
    if (!d.is_array() || d.size() != rec.descriptor.values.size())
      fail(errc::malformed_file, file + ": descriptor must hold 10 numbers");
    for (size_t i = 0; i < rec.descriptor.values.size(); ++i) {
      if (!d[i].is_number())
        fail(errc::malformed_file, file + ": descriptor must hold 10 numbers");
      rec.descriptor.values[i] = d[i].get<double>();
    }
  } else {
    try {
      rec.descriptor = descriptor(rec.outline.points);
    } catch (const Error& e) {
      fail(errc::malformed_file,
           file + ": cannot compute descriptor: " + e.what());
    }
  }
  return rec;
}

}  // namespace

ShapeDb load_db(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    fail(errc::io_failure, "'" + dir.string() + "' is not a directory");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  if (ec) fail(errc::io_failure, "cannot list '" + dir.string() + "'");
  std::sort(files.begin(), files.end());

  ShapeDb db;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) fail(errc::io_failure, "cannot open '" + file.string() + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
      fail(errc::malformed_file, file.string() + ": invalid JSON");
    ShapeRecord rec = parse_shape(j, file.string());
    if (find_shape(db, rec.outline.name) != nullptr)
      fail(errc::duplicate_name,
           "shape '" + rec.outline.name + "' appears more than once");
    db.shapes.push_back(std::move(rec));
  }
  return db;
}

void save_db(const ShapeDb& db, const fs::path& dir) {
  for (const auto& s : db.shapes)
    if (!safe_name(s.outline.name))
      fail(errc::bad_parameter,
           "shape name '" + s.outline.name + "' is not filesystem-safe");

  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(errc::io_failure, "cannot create '" + dir.string() + "'");

  for (const auto& s : db.shapes) {
    json j;
    j["name"] = s.outline.name;
    auto& pts = j["points"] = json::array();
    for (const auto& p : s.outline.points) pts.push_back({p.x, p.y});
    auto& desc = j["descriptor"] = json::array();
    for (const double v : s.descriptor.values) desc.push_back(v);
    const fs::path file = dir / (s.outline.name + ".json");
    std::ofstream out(file);
    if (!out) fail(errc::io_failure, "cannot write '" + file.string() + "'");
    out << j.dump(2) << '\n';
    if (!out) fail(errc::io_failure, "cannot write '" + file.string() + "'");
  }
}

ShapeRecord load_shape_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) fail(errc::io_failure, "cannot open '" + file.string() + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    fail(errc::malformed_file, file.string() + ": invalid JSON");
  return parse_shape(j, file.string());
}

ShapeDb db_from_builtins(std::span<const Builtin> kinds, int n) {
  ShapeDb db;
  for (const Builtin k : kinds) {
    ShapeRecord rec;
    rec.outline = builtin_shape(k, n);
    rec.descriptor = descriptor(rec.outline.points);
    db.shapes.push_back(std::move(rec));
  }
  return db;
}

}  // namespace dotshape
