#include "orbiform/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "orbiform/error.hpp"

namespace orbiform {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string g17(double v) { return fmt("%.17g", v); }
std::string f6(double v) {
  std::string s = fmt("%.6f", v);
  return s == "-0.000000" ? "0.000000" : s;
}

void dump_rec(const Json& j, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(k).dump();
        out += pretty ? ": " : ":";
        dump_rec(v, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_rec(v, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? g17(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

std::uint64_t parse_index(const std::string& key) {
  std::uint64_t v = 0;
  const char* end = key.data() + key.size();
  auto [p, ec] = std::from_chars(key.data(), end, v);
  if (ec != std::errc() || p != end || key.empty()) {
    fail(ErrorKind::invalid_argument, "bad harmonic index '" + key + "'");
  }
  return v;
}

double number_of(const Json& v, const std::string& where) {
  if (!v.is_number()) fail(ErrorKind::invalid_argument, where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(ErrorKind::invalid_argument, where + " must be finite");
  return x;
}

const Json& object_field(const Json& j, const char* key) {
  static const Json empty = Json::object();
  if (!j.contains(key)) return empty;
  const Json& v = j.at(key);
  if (!v.is_object()) fail(ErrorKind::invalid_argument, std::string("'") + key + "' must be an object");
  return v;
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();
  void add(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

// Coordinates are emitted with y flipped so that +y points up on screen.
std::string svg_open(const Box& b) {
  const double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-9});
  const double m = 0.05 * span;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << f6(b.x0 - m) << ' ' << f6(-b.y1 - m)
    << ' ' << f6(b.x1 - b.x0 + 2 * m) << ' ' << f6(b.y1 - b.y0 + 2 * m) << "\">\n";
  return o.str();
}

std::string pt(double x, double y) { return f6(x) + "," + f6(-y); }

std::string hue_color(double rho, double w) {
  const double f = std::clamp(w > 0 ? rho / w : 0.0, 0.0, 1.0);
  // HSV ramp from blue (rho = 0) to red (rho = w), full saturation.
  const double h = (1.0 - f) * 240.0 / 60.0;
  const double x = 1.0 - std::abs(std::fmod(h, 2.0) - 1.0);
  double r = 0, g = 0, b = 0;
  if (h < 1) {
    r = 1, g = x;
  } else if (h < 2) {
    r = x, g = 1;
  } else if (h < 3) {
    g = 1, b = x;
  } else {
    g = x, b = 1;
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(r * 255)),
                static_cast<int>(std::lround(g * 255)), static_cast<int>(std::lround(b * 255)));
  return buf;
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, out);
  return out;
}

TrigSeries1D series1d_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_argument, "coefficient file must hold a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (k != "mean" && k != "cos" && k != "sin") {
      fail(ErrorKind::invalid_argument, "unknown key '" + k + "' in coefficient file");
    }
  }
  const double mean = j.contains("mean") ? number_of(j.at("mean"), "mean") : 0.0;
  std::vector<Harmonic> terms;
  for (const char* part : {"cos", "sin"}) {
    for (const auto& [key, v] : object_field(j, part).items()) {
      const std::uint64_t k = parse_index(key);
      if (k == 0) fail(ErrorKind::invalid_argument, "harmonic 0 belongs in 'mean'");
      const double c = number_of(v, std::string(part) + "[" + key + "]");
      terms.push_back(part[0] == 'c' ? Harmonic{k, c, 0.0} : Harmonic{k, 0.0, c});
    }
  }
  return TrigSeries1D(mean, std::move(terms));
}

Json series1d_to_json(const TrigSeries1D& s) {
  Json j;
  j["mean"] = s.mean_term();
  Json c = Json::object(), sn = Json::object();
  for (const Harmonic& h : s.terms()) {
    if (h.a != 0.0) c[std::to_string(h.k)] = h.a;
    if (h.b != 0.0) sn[std::to_string(h.k)] = h.b;
  }
  j["cos"] = c;
  j["sin"] = sn;
  return j;
}

TrigSeries2D series2d_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::invalid_argument, "coefficient file must hold a JSON object");
  std::vector<Term2D> terms;
  for (const auto& [key, block] : j.items()) {
    const auto kind = term_kind_from_string(key);
    if (!kind) fail(ErrorKind::invalid_argument, "unknown key '" + key + "' in surface coefficient file");
    for (const auto& [idx, v] : object_field(j, key.c_str()).items()) {
      const auto comma = idx.find(',');
      if (comma == std::string::npos) fail(ErrorKind::invalid_argument, "index '" + idx + "' must be \"m,n\"");
      const std::uint64_t m = parse_index(idx.substr(0, comma));
      const std::uint64_t n = parse_index(idx.substr(comma + 1));
      if (m > 1000000 || n > 1000000) fail(ErrorKind::invalid_argument, "surface harmonic index too large");
      terms.push_back({static_cast<unsigned>(m), static_cast<unsigned>(n), *kind,
                       number_of(v, key + "[" + idx + "]")});
    }
  }
  return TrigSeries2D(std::move(terms));
}

Json series2d_to_json(const TrigSeries2D& s) {
  Json j;
  for (TermKind k : {TermKind::cc, TermKind::sc, TermKind::cs, TermKind::ss}) {
    Json block = Json::object();
    for (const Term2D& t : s.terms()) {
      if (t.kind == k) block[std::to_string(t.m) + "," + std::to_string(t.n)] = t.coeff;
    }
    j[to_string(k)] = block;
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::invalid_argument, "'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorKind::io, "write failed for '" + path + "'");
}

std::string samples_csv(const std::vector<CurveSample>& rows) {
  std::string out = "t,x,y,p,rho,width\n";
  for (const CurveSample& r : rows) {
    out += g17(r.t) + ',' + g17(r.x) + ',' + g17(r.y) + ',' + g17(r.p) + ',' + g17(r.rho) + ',' +
           g17(r.width) + '\n';
  }
  return out;
}

std::string curve_svg(const SupportCurve& c, CurveSvgOptions opt) {
  if (opt.segments < 3) fail(ErrorKind::invalid_argument, "need at least 3 segments");
  const std::size_t n = opt.segments;
  std::vector<Point2> pts(n);
  Box box;
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = point_at(c, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    box.add(pts[i].x, pts[i].y);
  }
  std::string out = svg_open(box);
  const double stroke = 0.005 * std::max(box.x1 - box.x0, box.y1 - box.y0);
  if (!opt.hue) {
    out += "<path fill=\"none\" stroke=\"black\" stroke-width=\"" + f6(stroke) + "\" d=\"M";
    for (std::size_t i = 0; i < n; ++i) out += (i ? " L" : "") + pt(pts[i].x, pts[i].y);
    out += " Z\"/>\n";
  } else {
    const double w = c.is_zero_width() ? 1.0 : mean_width(c);
    out += "<g fill=\"none\" stroke-width=\"" + f6(stroke) + "\" stroke-linecap=\"round\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      const double tm = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
      const Point2& a = pts[i];
      const Point2& b = pts[(i + 1) % n];
      out += "<line x1=\"" + f6(a.x) + "\" y1=\"" + f6(-a.y) + "\" x2=\"" + f6(b.x) + "\" y2=\"" +
             f6(-b.y) + "\" stroke=\"" + hue_color(radius_of_curvature(c, tm), w) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string packing_svg(const PackingLayout& layout, std::size_t k_cells, std::size_t l_cells) {
  if (k_cells == 0 || l_cells == 0) fail(ErrorKind::invalid_argument, "need at least one cell");
  const double w = layout.body_width;
  const Rect& d = layout.fundamental_domain;
  const Vec2 b0 = layout.lattice_basis[0], b1 = layout.lattice_basis[1];
  std::vector<std::array<Vec2, 3>> bodies;
  Box box;
  for (std::size_t j = 0; j < l_cells; ++j) {
    for (std::size_t i = 0; i < k_cells; ++i) {
      const double ox = static_cast<double>(i) * b0.x + static_cast<double>(j) * b1.x;
      const double oy = static_cast<double>(i) * b0.y + static_cast<double>(j) * b1.y;
      box.add(d.x0 + ox, d.y0 + oy);
      box.add(d.x1 + ox, d.y1 + oy);
      for (const Pose& g : layout.generators) {
        Pose p = g;
        p.translation.x += ox;
        p.translation.y += oy;
        const auto v = body_vertices(p, w);
        bodies.push_back(v);
        // Arc extremes lie within the circumcircle; bound generously.
        const double R = w / std::sqrt(3.0);
        box.add(p.translation.x - R, p.translation.y - R);
        box.add(p.translation.x + R, p.translation.y + R);
      }
    }
  }
  std::string out = svg_open(box);
  const double stroke = 0.003 * std::max(box.x1 - box.x0, box.y1 - box.y0);
  out += "<g fill=\"none\" stroke=\"#888888\" stroke-width=\"" + f6(stroke) + "\">\n";
  for (std::size_t j = 0; j < l_cells; ++j) {
    for (std::size_t i = 0; i < k_cells; ++i) {
      const double ox = static_cast<double>(i) * b0.x + static_cast<double>(j) * b1.x;
      const double oy = static_cast<double>(i) * b0.y + static_cast<double>(j) * b1.y;
      out += "<rect x=\"" + f6(d.x0 + ox) + "\" y=\"" + f6(-(d.y1 + oy)) + "\" width=\"" +
             f6(d.x1 - d.x0) + "\" height=\"" + f6(d.y1 - d.y0) + "\"/>\n";
    }
  }
  out += "</g>\n<g fill=\"#cfe0f5\" stroke=\"black\" stroke-width=\"" + f6(stroke) + "\">\n";
  for (const auto& v : bodies) {
    // Counter-clockwise vertices become clockwise on screen (sweep 1).
    const double cross = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[1].y - v[0].y) * (v[2].x - v[0].x);
    const char* sweep = cross > 0 ? "1" : "0";
    out += "<path d=\"M" + pt(v[0].x, v[0].y);
    for (int e = 1; e <= 3; ++e) {
      const Vec2& to = v[e % 3];
      out += " A" + f6(w) + "," + f6(w) + " 0 0 " + sweep + " " + pt(to.x, to.y);
    }
    out += " Z\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string mesh_obj(const TriangleMesh& mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 64 + mesh.faces.size() * 24);
  for (const Vec3& v : mesh.vertices) out += "v " + g17(v.x) + ' ' + g17(v.y) + ' ' + g17(v.z) + '\n';
  for (const auto& f : mesh.faces) {
    out += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' +
           std::to_string(f[2] + 1) + '\n';
  }
  return out;
}

std::string vertex_values_csv(const std::vector<double>& values, const std::string& column) {
  std::string out = "vertex," + column + "\n";
  for (std::size_t i = 0; i < values.size(); ++i) out += std::to_string(i + 1) + ',' + g17(values[i]) + '\n';
  return out;
}

ObjCounts parse_obj_counts(const std::string& text) {
  ObjCounts c;
  std::istringstream in(text);
  std::string line;
  std::vector<std::size_t> indices;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) fail(ErrorKind::invalid_argument, "malformed vertex record");
      ++c.vertices;
    } else if (tag == "f") {
      std::size_t k = 0;
      std::string tok;
      while (ls >> tok) {
        indices.push_back(std::stoul(tok.substr(0, tok.find('/'))));
        ++k;
      }
      if (k < 3) fail(ErrorKind::invalid_argument, "face with fewer than 3 vertices");
      ++c.faces;
    }
  }
  for (std::size_t i : indices) {
    if (i == 0 || i > c.vertices) fail(ErrorKind::invalid_argument, "face index out of range");
  }
  return c;
}

}  // namespace orbiform
