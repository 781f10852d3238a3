#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "orbiform/catalog.hpp"
#include "orbiform/error.hpp"
#include "orbiform/io.hpp"

using namespace orbiform;

namespace {
std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}
}  // namespace

TEST_CASE("1d series json") {
  Json j = Json::parse(R"({"mean": 1.0, "cos": {"3": 0.125}, "sin": {"5": 0.01}})");
  TrigSeries1D s = series1d_from_json(j);
  CHECK(s == TrigSeries1D(1.0, {{3, 0.125, 0.0}, {5, 0.0, 0.01}}));
  CHECK(series1d_from_json(series1d_to_json(s)) == s);
  CHECK(series1d_from_json(Json::parse(R"({"mean": 2})")) == TrigSeries1D(2.0));
  CHECK_THROWS_AS(series1d_from_json(Json::parse(R"({"mean": 1, "tan": {}})")), GeometryError);
  CHECK_THROWS_AS(series1d_from_json(Json::parse(R"({"mean": 1, "cos": {"0": 1}})")), GeometryError);
  CHECK_THROWS_AS(series1d_from_json(Json::parse(R"({"mean": 1, "cos": {"x": 1}})")), GeometryError);
}

TEST_CASE("2d series json") {
  TrigSeries2D s({{3, 1, TermKind::cs, -0.025}, {0, 0, TermKind::cc, 1.0}});
  Json j = series2d_to_json(s);
  CHECK(j["cc"]["0,0"] == 1.0);
  CHECK(series2d_from_json(j) == s);
  CHECK_THROWS_AS(series2d_from_json(Json::parse(R"({"cc": {"1": 1}})")), GeometryError);
}

TEST_CASE("floats are printed with 17 significant digits") {
  Json j = {{"x", 0.1}, {"n", 3}, {"bad", std::nan("")}};
  std::string s = dump_json(j, -1);
  CHECK(s == R"({"x":0.10000000000000001,"n":3,"bad":null})");
}

TEST_CASE("files") {
  auto path = std::filesystem::temp_directory_path() / "orbiform_io_test.json";
  write_text_file(path.string(), R"({"mean": 1})");
  CHECK(read_json_file(path.string())["mean"] == 1);
  write_text_file(path.string(), "{not json");
  CHECK_THROWS_AS(read_json_file(path.string()), GeometryError);
  std::filesystem::remove(path);
  try {
    read_json_file("/nonexistent/dir/x.json");
    FAIL("expected io error");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::io);
  }
}

TEST_CASE("csv samples") {
  std::string csv = samples_csv(samples(circle(2), 4));
  CHECK(csv.rfind("t,x,y,p,rho,width\n", 0) == 0);
  CHECK(count(csv, "\n") == 5);
  CHECK(csv.find("0,1,0,1,1,2\n") != std::string::npos);
}

TEST_CASE("svg output") {
  std::string plain = curve_svg(rabinowitz(0.125));
  CHECK(plain.rfind("<svg", 0) == 0);
  CHECK(count(plain, "<path") == 1);
  CHECK(count(plain, "<line") == 0);
  std::string hue = curve_svg(rabinowitz(0.125), {256, true});
  CHECK(count(hue, "<line") == 256);
  std::string packing = packing_svg(build_layout(), 3, 3);
  CHECK(count(packing, "<path") == 18);
  CHECK(count(packing, "<rect") >= 9);
}

TEST_CASE("obj output") {
  TriangleMesh m = export_mesh(catalog_surface("sphere"), {16, 8});
  std::string obj = mesh_obj(m);
  ObjCounts c = parse_obj_counts(obj);
  CHECK(c.vertices == m.vertices.size());
  CHECK(c.faces == m.faces.size());
  CHECK_THROWS_AS(parse_obj_counts("v 0 0 0\nf 1 2 3\n"), GeometryError);
  std::string csv = vertex_values_csv({1.5, 2.0}, "rho0");
  CHECK(csv == "vertex,rho0\n1,1.5\n2,2\n");
}
