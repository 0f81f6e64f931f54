#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dotshape/pointset.hpp"
#include "dotshape/shape_db.hpp"
#include "dotshape/shapes.hpp"

namespace fs = std::filesystem;
using dotshape::Builtin;
using dotshape::db_from_builtins;
using dotshape::Point2;
using dotshape::PointSetFile;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("dotshape-cli-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI with the given argument string, capturing exit code and both
// output streams.
CliRun run_cli(const TempDir& dir, const std::string& args) {
  const fs::path out_file = dir.path / "cli-stdout.txt";
  const fs::path err_file = dir.path / "cli-stderr.txt";
  const std::string cmd = std::string(DOTSHAPE_CLI_PATH) + " " + args + " >" +
                          out_file.string() + " 2>" + err_file.string();
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

size_t count_substr(const std::string& hay, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  TempDir dir;
  CHECK(run_cli(dir, "").code == 2);
  CHECK(run_cli(dir, "conquer").code == 2);
  CHECK(run_cli(dir, "sample --k 10").code == 2);  // missing required flags
  CHECK(run_cli(dir, "--help").code == 0);
}

TEST_CASE("sample: writes a loadable point set with ground truth") {
  TempDir dir;
  const fs::path f = dir.path / "dots.json";
  const CliRun r =
      run_cli(dir, "sample --shape builtin:circle --k 30 --out " + f.string());
  REQUIRE(r.code == 0);
  const PointSetFile ps = dotshape::read_pointset(f);
  CHECK(ps.k == 30);
  CHECK(ps.points.size() == 30);
  REQUIRE(ps.source.has_value());
  CHECK(*ps.source == "circle");
  REQUIRE(ps.truth_edges.has_value());
  CHECK(ps.truth_edges->size() == 30);
}

TEST_CASE("sample: parameter and file errors") {
  TempDir dir;
  const std::string out = " --out " + (dir.path / "x.json").string();
  const CliRun small = run_cli(dir, "sample --shape builtin:circle --k 2" + out);
  CHECK(small.code == 2);
  CHECK(small.err.find("K must be at least 3") != std::string::npos);
  CHECK(small.err.find("[KTooSmall]") != std::string::npos);

  const CliRun big =
      run_cli(dir, "sample --shape builtin:circle --k 1000" + out);
  CHECK(big.code == 2);
  CHECK(big.err.find("[KExceedsOutline]") != std::string::npos);

  CHECK(run_cli(dir, "sample --shape builtin:blob --k 30" + out).code == 2);
  CHECK(run_cli(dir, "sample --shape missing.json --k 30" + out).code == 3);
}

TEST_CASE("group: surface recovers the circle and reports xi") {
  TempDir dir;
  const fs::path dots = dir.path / "dots.json";
  REQUIRE(run_cli(dir, "sample --shape builtin:circle --k 30 --out " +
                           dots.string())
              .code == 0);
  const fs::path rec = dir.path / "rec.json";
  const CliRun r = run_cli(dir, "group --points " + dots.string() +
                                    " --method surface --out " + rec.string());
  REQUIRE(r.code == 0);
  CHECK(r.out == "xi=1.000000\n");
  const auto j = nlohmann::json::parse(slurp(rec));
  CHECK(j["method"] == "surface");
  CHECK(j["k"] == 30);
  CHECK(j["hamiltonian"] == true);
  CHECK(j["xi"] == 1.0);
  CHECK(j["selected_edges"].size() == 30);

  const CliRun m = run_cli(dir, "group --points " + dots.string() +
                                    " --method mst --out " + rec.string());
  REQUIRE(m.code == 0);
  CHECK(m.out == "xi=1.000000\n");
  const auto jm = nlohmann::json::parse(slurp(rec));
  CHECK(jm["method"] == "mst");
  CHECK(jm["hamiltonian"].is_null());
  CHECK(jm["selected_edges"].size() == 29);
}

TEST_CASE("group: stop-flatness is surface-only; truthless sets print no xi") {
  TempDir dir;
  const fs::path dots = dir.path / "dots.json";
  REQUIRE(run_cli(dir, "sample --shape builtin:star5 --k 40 --out " +
                           dots.string())
              .code == 0);
  const fs::path rec = dir.path / "rec.json";
  CHECK(run_cli(dir, "group --points " + dots.string() +
                         " --method mst --stop-flatness 5 --out " +
                         rec.string())
            .code == 2);
  const CliRun neg = run_cli(dir, "group --points " + dots.string() +
                                      " --method surface --stop-flatness -1 " +
                                      "--out " + rec.string());
  CHECK(neg.code == 2);
  CHECK(neg.err.find("[BadParameter]") != std::string::npos);
  const CliRun thr = run_cli(dir, "group --points " + dots.string() +
                                      " --method surface --stop-flatness 5 " +
                                      "--out " + rec.string());
  REQUIRE(thr.code == 0);
  const auto j = nlohmann::json::parse(slurp(rec));
  CHECK(j["method"] == "surface");

  PointSetFile bare;
  bare.k = 4;
  bare.points = {{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  const fs::path barefile = dir.path / "bare.json";
  dotshape::write_pointset(bare, barefile);
  const CliRun b = run_cli(dir, "group --points " + barefile.string() +
                                    " --method surface --out " + rec.string());
  REQUIRE(b.code == 0);
  CHECK(b.out.empty());
  CHECK(nlohmann::json::parse(slurp(rec))["xi"].is_null());
}

TEST_CASE("group: geometry failures exit with code 4") {
  TempDir dir;
  const fs::path rec = dir.path / "rec.json";

  PointSetFile dup;
  dup.k = 3;
  dup.points = {{1, 1}, {1, 1}, {2, 2}};
  const fs::path dupfile = dir.path / "dup.json";
  dotshape::write_pointset(dup, dupfile);
  const CliRun d = run_cli(dir, "group --points " + dupfile.string() +
                                    " --method surface --out " + rec.string());
  CHECK(d.code == 4);
  CHECK(d.err.find("[DuplicatePoints]") != std::string::npos);

  PointSetFile line;
  line.k = 4;
  line.points = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const fs::path linefile = dir.path / "line.json";
  dotshape::write_pointset(line, linefile);
  const CliRun l = run_cli(dir, "group --points " + linefile.string() +
                                    " --method surface --out " + rec.string());
  CHECK(l.code == 4);
  CHECK(l.err.find("[DegenerateInput]") != std::string::npos);
}

TEST_CASE("sweep: deterministic CSV with frozen rows and summary") {
  TempDir dir;
  const fs::path dbdir = dir.path / "db";
  constexpr Builtin kinds[] = {Builtin::circle, Builtin::square};
  dotshape::save_db(db_from_builtins(kinds, 260), dbdir);

  const fs::path csv1 = dir.path / "sweep1.csv";
  const fs::path csv2 = dir.path / "sweep2.csv";
  const std::string args = "sweep --db " + dbdir.string() +
                           " --kmin 20 --kmax 40 --kstep 10 --out ";
  REQUIRE(run_cli(dir, args + csv1.string()).code == 0);
  REQUIRE(run_cli(dir, args + csv2.string()).code == 0);
  const std::string text = slurp(csv1);
  CHECK(text == slurp(csv2));  // byte-identical reruns

  CHECK(text.find("shape,method,K,xi,hamiltonian,runtime_ms\n") == 0);
  CHECK(count_substr(text, "circle,mst,20,1.000000,n/a,0.000\n") == 1);
  CHECK(count_substr(text, "circle,surface,20,1.000000,true,0.000\n") == 1);
  CHECK(count_substr(text, "square,surface,40,") == 1);
  CHECK(count_substr(text, "# summary") == 1);
  CHECK(count_substr(text, "# m,") == 4);   // 2 shapes x 2 methods
  CHECK(count_substr(text, "# n,") == 2);   // retrieval per shape
  // mst rows appear before surface rows for each shape.
  CHECK(text.find("circle,mst,") < text.find("circle,surface,"));
  CHECK(text.find("circle,surface,") < text.find("square,mst,"));

  // Restricting methods drops surface rows and the retrieval block.
  const fs::path csv3 = dir.path / "sweep3.csv";
  REQUIRE(run_cli(dir, "sweep --db " + dbdir.string() +
                           " --methods mst --kmin 20 --kmax 20 --out " +
                           csv3.string())
              .code == 0);
  const std::string mst_only = slurp(csv3);
  CHECK(count_substr(mst_only, ",surface,") == 0);
  CHECK(count_substr(mst_only, "# n,") == 0);
  CHECK(count_substr(mst_only, "# m,") == 2);

  CHECK(run_cli(dir, "sweep --db " + dbdir.string() + " --kmin 2 --out " +
                         csv3.string())
            .code == 2);
  CHECK(run_cli(dir, "sweep --db " + (dir.path / "nodb").string() + " --out " +
                         csv3.string())
            .code == 3);
}

TEST_CASE("retrieve: finds the circle in the builtin five-shape db") {
  TempDir dir;
  const fs::path dbdir = dir.path / "db";
  constexpr Builtin kinds[] = {Builtin::circle, Builtin::star5,
                               Builtin::square, Builtin::ellipse, Builtin::L};
  dotshape::save_db(db_from_builtins(kinds), dbdir);

  const fs::path log = dir.path / "steps.json";
  const CliRun r = run_cli(dir, "retrieve --db " + dbdir.string() +
                                    " --id circle --log " + log.string());
  REQUIRE(r.code == 0);
  CHECK(r.out == "n=30\n");
  const auto steps = nlohmann::json::parse(slurp(log));
  REQUIRE(steps.is_array());
  REQUIRE(!steps.empty());
  CHECK(steps.back()["n"] == 30);
  CHECK(steps.back()["best"] == "circle");
  CHECK(steps.back()["identity_ok"] == true);
  CHECK(steps.back()["margin_ok"] == true);
  CHECK(steps.back()["distances"].size() == 5);

  CHECK(run_cli(dir, "retrieve --db " + dbdir.string() + " --id nope").code ==
        2);
}

TEST_CASE("retrieve: duplicate shapes report NO-TERMINATION with exit 0") {
  TempDir dir;
  const fs::path dbdir = dir.path / "db";
  constexpr Builtin one[] = {Builtin::circle};
  dotshape::ShapeDb db = db_from_builtins(one, 260);
  dotshape::ShapeRecord twin = db.shapes[0];
  twin.outline.name = "circle2";
  db.shapes.push_back(twin);
  dotshape::save_db(db, dbdir);

  const CliRun r =
      run_cli(dir, "retrieve --db " + dbdir.string() + " --id circle --cap 60");
  REQUIRE(r.code == 0);
  CHECK(r.out == "NO-TERMINATION\n");
}

TEST_CASE("render: all four modes, element counts, flag validation") {
  TempDir dir;
  const fs::path dots = dir.path / "dots.json";
  REQUIRE(run_cli(dir, "sample --shape builtin:circle --k 10 --out " +
                           dots.string())
              .code == 0);

  const fs::path svg = dir.path / "out.svg";
  REQUIRE(run_cli(dir, "render --points " + dots.string() +
                           " --mode points --out " + svg.string())
              .code == 0);
  CHECK(count_substr(slurp(svg), "<circle") == 10);
  CHECK(count_substr(slurp(svg), "viewBox=\"0 0 512 512\"") == 1);

  const fs::path all_svg = dir.path / "all.svg";
  const fs::path inside_svg = dir.path / "inside.svg";
  REQUIRE(run_cli(dir, "render --shape builtin:L --k 30 "
                       "--mode all-triangles --out " +
                           all_svg.string())
              .code == 0);
  REQUIRE(run_cli(dir, "render --shape builtin:L --k 30 --mode triangles "
                       "--out " +
                           inside_svg.string())
              .code == 0);
  const size_t all_count = count_substr(slurp(all_svg), "<polygon");
  const size_t inside_count = count_substr(slurp(inside_svg), "<polygon");
  CHECK(inside_count < all_count);
  CHECK(inside_count > 0);

  REQUIRE(run_cli(dir, "render --shape builtin:star5 --k 25 --mode grouping "
                       "--out " +
                           svg.string())
              .code == 0);
  CHECK(count_substr(slurp(svg), "<line") > 0);

  // triangles mode needs the dense outline, so --points alone is an error.
  CHECK(run_cli(dir, "render --points " + dots.string() +
                         " --mode triangles --out " + svg.string())
            .code == 2);
  // --points and --shape are mutually exclusive; neither is also an error.
  CHECK(run_cli(dir, "render --points " + dots.string() +
                         " --shape builtin:circle --k 5 --mode points --out " +
                         svg.string())
            .code == 2);
  CHECK(run_cli(dir, "render --mode points --out " + svg.string()).code == 2);
  CHECK(run_cli(dir, "render --shape builtin:circle --mode points --out " +
                         svg.string())
            .code == 2);
  CHECK(run_cli(dir, "render --shape builtin:circle --k 12 --mode wat --out " +
                         svg.string())
            .code == 2);
}
