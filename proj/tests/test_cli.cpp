#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "orbiform/catalog.hpp"
#include "orbiform/io.hpp"
#include "orbiform/surface.hpp"

using namespace orbiform;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("orbiform_cli_" + name);
}

}  // namespace

TEST_CASE("curve metrics") {
  Run r = run({"curve", "metrics", "--catalog", "rabinowitz"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["area"].get<double>() == doctest::Approx(2.9452431127404308).epsilon(1e-15));
  CHECK(j["degree"] == 1);
  CHECK(j["constant_width"] == true);

  r = run({"curve", "metrics", "--catalog", "ellipse"});
  CHECK(Json::parse(r.out)["degree"] == "unbounded");

  r = run({"curve", "metrics", "--catalog", "rabinowitz", "--param", "a=0.05"});
  CHECK(Json::parse(r.out)["area"].get<double>() == doctest::Approx((1 - 4 * 0.0025) * 3.141592653589793));
}

TEST_CASE("coefficient files") {
  auto p = tmp("coeffs.json");
  write_text_file(p.string(), R"({"mean": 1.0, "cos": {"2": 0.3333333333333333}})");
  Run r = run({"curve", "metrics", "--coeffs", p.string()});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["degree"] == 2);
  std::filesystem::remove(p);
}

TEST_CASE("output is deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"curve", "samples", "--catalog", "fejer"},
           {"curve", "svg", "--catalog", "lozenge", "--hue"},
           {"surface", "metrics", "--catalog", "S1", "--grid", "64x32"},
           {"packing", "density", "--samples", "20000", "--seed", "3"},
       }) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("every catalog name is accepted") {
  for (const CatalogEntry& e : curve_catalog()) {
    CAPTURE(e.name);
    CHECK(run({"curve", "metrics", "--catalog", e.name}).code == 0);
  }
  for (const std::string& name : surface_catalog_names()) {
    CAPTURE(name);
    CHECK(run({"surface", "metrics", "--catalog", name, "--grid", "32x16"}).code == 0);
  }
  Run list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("sphere") != std::string::npos);
}

TEST_CASE("mesh export") {
  auto p = tmp("s53.obj");
  Run r = run({"surface", "mesh", "--catalog", "S53", "--grid", "64x32", "--out", p.string(), "--radius", "rho0"});
  REQUIRE(r.code == 0);
  ObjCounts c = parse_obj_counts(slurp(p));
  CHECK(c.vertices == 64 * 31 + 2);
  CHECK(c.faces == 2 * 64 * 31);
  std::string csv = slurp(p.string() + ".rho0.csv");
  CHECK(csv.rfind("vertex,rho0\n", 0) == 0);
  std::filesystem::remove(p);
  std::filesystem::remove(p.string() + ".rho0.csv");
}

TEST_CASE("exit codes") {
  CHECK(run({"curve", "metrics", "--catalog", "nope"}).code == 2);
  CHECK(run({"curve", "metrics", "--catalog", "circle", "--param", "r=1"}).code == 2);
  CHECK(run({"curve", "metrics", "--bogus"}).code == 2);
  CHECK(run({"curve", "metrics", "--catalog", "rabinowitz", "--param", "a=0.2"}).code == 2);
  CHECK(run({"packing", "density", "--samples", "10"}).code == 2);
  CHECK(run({"curve", "svg", "--catalog", "circle", "--out", "/nonexistent/dir/x.svg"}).code == 1);
  CHECK(run({"curve", "metrics", "--coeffs", "/nonexistent/c.json"}).code == 1);
  CHECK(run({"surface", "verify", "--catalog", "S10"}).code == 0);
  CHECK(run({"curve", "verify", "--catalog", "lozenge"}).code == 0);
}
