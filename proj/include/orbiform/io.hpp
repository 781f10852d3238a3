#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbiform/curve.hpp"
#include "orbiform/packing.hpp"
#include "orbiform/surface.hpp"
#include "orbiform/trig_series.hpp"

namespace orbiform {

using Json = nlohmann::ordered_json;

// Serialises with every floating-point number printed as %.17g; non-finite
// numbers become null. indent < 0 gives a single line.
std::string dump_json(const Json& j, int indent = 2);

// {"mean": 1.0, "cos": {"3": 0.125}, "sin": {}}; absent keys are zero.
TrigSeries1D series1d_from_json(const Json& j);
Json series1d_to_json(const TrigSeries1D& s);
// {"cc": {"0,0": 1}, "sc": {}, "cs": {"3,1": -0.025}, "ss": {}}.
TrigSeries2D series2d_from_json(const Json& j);
Json series2d_to_json(const TrigSeries2D& s);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Header t,x,y,p,rho,width then one row per sample.
std::string samples_csv(const std::vector<CurveSample>& rows);

struct CurveSvgOptions {
  std::size_t segments = 512;
  // Colour each segment by rho mapped from [0, w] onto a blue-to-red ramp;
  // otherwise a single closed path is drawn.
  bool hue = false;
};
std::string curve_svg(const SupportCurve& c, CurveSvgOptions opt = {});

// K x L lattice cells: every generator translated into each cell, drawn as
// three circular arcs, plus the cell rectangles.
std::string packing_svg(const PackingLayout& layout, std::size_t k_cells, std::size_t l_cells);

std::string mesh_obj(const TriangleMesh& mesh);
// Header "vertex,value", one row per mesh vertex (1-based like the OBJ).
std::string vertex_values_csv(const std::vector<double>& values, const std::string& column);

struct ObjCounts {
  std::size_t vertices = 0;
  std::size_t faces = 0;
};
// Reads "v" and "f" records of an OBJ text; validates face indices.
ObjCounts parse_obj_counts(const std::string& text);

}  // namespace orbiform
