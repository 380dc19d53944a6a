#include <chrono>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

#include "cauchybv/io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& tag) {
  static int counter = 0;
  auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  fs::path dir = fs::temp_directory_path() /
                 ("cauchybv_" + tag + "_" + std::to_string(stamp) + "_" +
                  std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

int run_cli(std::vector<std::string> args) { return cauchybv::cli::run(args); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval writes the advertised schema and honours --strict") {
  fs::path dir = fresh_dir("eval");
  int rc = run_cli({"eval", "--curve", "circle", "--N", "64", "--density",
                    "power:3", "--z", "0.5,0", "--z", "2,1", "--out",
                    dir.string()});
  CHECK(rc == 0);
  std::string csv = cauchybv::read_file(dir / "eval.csv");
  CHECK(csv.find("re_z,im_z,re_phi,im_phi,warn_flag") != std::string::npos);
  CHECK(csv.find("# cauchybv") != std::string::npos);
  CHECK(csv.find("# config {") != std::string::npos);

  // A point hugging the curve trips the resolution warning under --strict.
  fs::path dir2 = fresh_dir("eval_strict");
  int rc2 = run_cli({"eval", "--curve", "circle", "--N", "64", "--density",
                     "power:3", "--z", "1.01,0", "--strict", "--out",
                     dir2.string()});
  CHECK(rc2 == 4);
}

TEST_CASE("config errors exit with code 2") {
  CHECK(run_cli({"eval", "--curve", "heptagon", "--density", "power:1", "--z",
                 "0.5,0"}) == 2);
  CHECK(run_cli({"eval", "--curve", "circle", "--N", "64", "--density",
                 "power:1"}) == 2);  // no points
  CHECK(run_cli({"jump", "--curve", "circle", "--N", "65", "--density",
                 "power:1", "--out", fresh_dir("bad").string()}) == 2);
  CHECK(run_cli({"classify"}) == 2);  // missing density
}

TEST_CASE("an inconclusive classification exits with code 3") {
  fs::path dir = fresh_dir("inconclusive");
  int rc = run_cli({"classify", "--curve", "circle", "--density", "pole:1.05,0",
                    "--grids", "8,16,32", "--out", dir.string()});
  CHECK(rc == 3);
  json verdict = json::parse(cauchybv::read_file(dir / "classify_verdict.json"));
  CHECK(verdict["decision"] == "inconclusive");
}

TEST_CASE("classify verdict carries residual histories and the config") {
  fs::path dir = fresh_dir("classify");
  int rc = run_cli({"classify", "--curve", "circle", "--density", "power:3",
                    "--grids", "32,64,128", "--out", dir.string()});
  CHECK(rc == 0);
  json v = json::parse(cauchybv::read_file(dir / "classify_verdict.json"));
  CHECK(v["decision"] == "interior");
  CHECK(v["residual_interior"].size() == 3);
  CHECK(v["residual_exterior"].size() == 3);
  CHECK(v["config"]["curve"]["kind"] == "unit_circle");
  CHECK(v["version"] == std::string(cauchybv::version_string));
}

TEST_CASE("a samples density requires an explicit threshold") {
  fs::path dir = fresh_dir("samples");
  fs::path samples = dir / "f.csv";
  {
    std::ofstream out(samples);
    out << "re_f,im_f\n";
    for (int j = 0; j < 128; ++j) out << "1.0,0.0\n";
  }
  int rc = run_cli({"classify", "--curve", "circle", "--density",
                    "samples:" + samples.string(), "--grids", "32,64,128",
                    "--out", dir.string()});
  CHECK(rc == 2);
  int rc2 = run_cli({"classify", "--curve", "circle", "--density",
                     "samples:" + samples.string(), "--grids", "32,64,128",
                     "--threshold", "1e-6", "--out", dir.string()});
  CHECK(rc2 == 0);
  json v = json::parse(cauchybv::read_file(dir / "classify_verdict.json"));
  CHECK(v["decision"] == "interior");  // constant 1 is the trace of z -> 1
}

TEST_CASE("a config file overrides command-line flags") {
  fs::path dir = fresh_dir("config");
  fs::path cfg = dir / "run.json";
  cauchybv::write_file(cfg, R"({
    "curve": {"kind": "ellipse", "a": 2.0, "b": 1.0, "N": 32},
    "density": {"kind": "pole", "z0": [4.0, 0.0]}
  })");
  int rc = run_cli({"trace", "--curve", "circle", "--N", "64", "--density",
                    "power:1", "--config", cfg.string(), "--out", dir.string()});
  CHECK(rc == 0);
  std::string csv = cauchybv::read_file(dir / "trace.csv");
  CHECK(csv.find("\"kind\":\"ellipse\"") != std::string::npos);
  CHECK(csv.find("\"N\":32") != std::string::npos);
  // 32 data rows + 2 comments + 1 header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 35);
}

TEST_CASE("repeated runs and thread counts produce identical bytes") {
  auto jump_args = [&](const fs::path& dir, const std::string& threads) {
    return std::vector<std::string>{"jump",      "--curve",   "kite",
                                    "--N",       "64",        "--density",
                                    "pole:4,0",  "--threads", threads,
                                    "--out",     dir.string()};
  };
  fs::path d1 = fresh_dir("det1"), d2 = fresh_dir("det2"), d4 = fresh_dir("det4");
  REQUIRE(run_cli(jump_args(d1, "1")) == 0);
  REQUIRE(run_cli(jump_args(d2, "1")) == 0);
  REQUIRE(run_cli(jump_args(d4, "4")) == 0);
  for (const char* name : {"jump.csv", "jump_summary.json"}) {
    std::string a = cauchybv::read_file(d1 / name);
    CHECK(a == cauchybv::read_file(d2 / name));
    CHECK(a == cauchybv::read_file(d4 / name));
  }
}

TEST_CASE("converge reproduces a known off-curve value") {
  fs::path dir = fresh_dir("converge");
  int rc = run_cli({"converge", "--curve", "circle", "--density", "power:3",
                    "--quantity", "offcurve", "--z", "0.5,0", "--grids",
                    "16,32,64", "--reference", "0.125,0", "--out",
                    dir.string()});
  CHECK(rc == 0);
  auto rows = cauchybv::read_numeric_csv(dir / "converge.csv");
  REQUIRE(rows.size() == 3);
  // error column shrinks geometrically (aliasing ~ |z|^N) and bottoms out
  CHECK(rows[0][3] > rows[1][3]);
  CHECK(rows[1][3] <= 1e-9);
  CHECK(rows[2][3] <= 1e-12);
}

TEST_CASE("circle demo emits per-node rows plus a summary") {
  fs::path dir = fresh_dir("demo");
  int rc = run_cli({"circle-demo", "--N", "256", "--exclude", "0.25", "--out",
                    dir.string()});
  CHECK(rc == 0);
  json s = json::parse(cauchybv::read_file(dir / "circle_demo_summary.json"));
  CHECK(s["n"] == 256);
  CHECK(s["sup_f"].get<double>() <= cauchybv::pi);
  CHECK(s["scan_radii"].size() == 4);
  auto rows = cauchybv::read_numeric_csv(dir / "circle_demo.csv");
  CHECK(rows.size() == 256);
  CHECK(rows[0].size() == 8);
}

TEST_CASE("trace exports the dense operator on request") {
  fs::path dir = fresh_dir("operator");
  int rc = run_cli({"trace", "--curve", "circle", "--N", "16", "--density",
                    "power:1", "--export-operator", "--out", dir.string()});
  CHECK(rc == 0);
  auto rows = cauchybv::read_numeric_csv(dir / "operator.csv");
  REQUIRE(rows.size() == 16);
  REQUIRE(rows[0].size() == 32);  // re/im interleaved columns
  // Row sums apply the operator to the unit density: B1 = 1.
  for (const auto& row : rows) {
    double re = 0.0, im = 0.0;
    for (std::size_t c = 0; c < row.size(); c += 2) {
      re += row[c];
      im += row[c + 1];
    }
    CHECK(re == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(im == doctest::Approx(0.0).epsilon(1e-10));
  }
}

}  // TEST_SUITE
