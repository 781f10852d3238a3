#include "orbiform/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "orbiform/error.hpp"
#include "orbiform/quadrature.hpp"

namespace orbiform {

namespace {

constexpr double kPi = std::numbers::pi;

// d^i/dx^i cos(x) and d^i/dx^i sin(x) at x, given c = cos x and s = sin x.
double dcos(unsigned i, double c, double s) {
  switch (i % 4) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
  }
}

double dsin(unsigned i, double c, double s) { return dcos(i + 3, c, s); }

bool t_is_cos(TermKind k) { return k == TermKind::cc || k == TermKind::cs; }
bool u_is_cos(TermKind k) { return k == TermKind::cc || k == TermKind::sc; }

double wrap_pi(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a;
}

void check_u(double u) {
  if (!(u > 0.0 && u < kPi)) fail(ErrorKind::invalid_argument, "need 0 < u < pi");
}

void check_grid(SurfaceGrid g) {
  if (g.nt < 4 || g.nu < 2) fail(ErrorKind::invalid_argument, "surface grid too small");
}

double grid_t(std::size_t i, std::size_t nt) {
  return 2.0 * kPi * static_cast<double>(i) / static_cast<double>(nt);
}

}  // namespace

const char* to_string(TermKind kind) noexcept {
  switch (kind) {
    case TermKind::cc: return "cc";
    case TermKind::sc: return "sc";
    case TermKind::cs: return "cs";
    case TermKind::ss: return "ss";
  }
  return "?";
}

std::optional<TermKind> term_kind_from_string(const std::string& s) {
  if (s == "cc") return TermKind::cc;
  if (s == "sc") return TermKind::sc;
  if (s == "cs") return TermKind::cs;
  if (s == "ss") return TermKind::ss;
  return std::nullopt;
}

TrigSeries2D::TrigSeries2D(std::vector<Term2D> terms) {
  std::map<std::tuple<int, unsigned, unsigned>, double> merged;
  for (const Term2D& t : terms) {
    if (!std::isfinite(t.coeff)) fail(ErrorKind::invalid_argument, "non-finite surface coefficient");
    // sin(0 x) terms are identically zero.
    if ((!t_is_cos(t.kind) && t.m == 0) || (!u_is_cos(t.kind) && t.n == 0)) continue;
    merged[{static_cast<int>(t.kind), t.m, t.n}] += t.coeff;
  }
  for (const auto& [key, c] : merged) {
    if (c == 0.0) continue;
    terms_.push_back({std::get<1>(key), std::get<2>(key), static_cast<TermKind>(std::get<0>(key)), c});
  }
}

double TrigSeries2D::coeff(TermKind kind, unsigned m, unsigned n) const {
  for (const Term2D& t : terms_) {
    if (t.kind == kind && t.m == m && t.n == n) return t.coeff;
  }
  return 0.0;
}

unsigned TrigSeries2D::max_m() const {
  unsigned r = 0;
  for (const Term2D& t : terms_) r = std::max(r, t.m);
  return r;
}

unsigned TrigSeries2D::max_n() const {
  unsigned r = 0;
  for (const Term2D& t : terms_) r = std::max(r, t.n);
  return r;
}

TrigSeries2D operator+(const TrigSeries2D& x, const TrigSeries2D& y) {
  std::vector<Term2D> all(x.terms_.begin(), x.terms_.end());
  all.insert(all.end(), y.terms_.begin(), y.terms_.end());
  return TrigSeries2D(std::move(all));
}

TrigSeries2D operator*(double alpha, const TrigSeries2D& x) {
  std::vector<Term2D> all(x.terms_.begin(), x.terms_.end());
  for (Term2D& t : all) t.coeff *= alpha;
  return TrigSeries2D(std::move(all));
}

double eval_partial(const TrigSeries2D& s, unsigned i, unsigned j, double t, double u) {
  double acc = 0.0;
  for (const Term2D& term : s.terms()) {
    const double mt = term.m * t;
    const double nu = term.n * u;
    const double ct = std::cos(mt), st = std::sin(mt);
    const double cu = std::cos(nu), su = std::sin(nu);
    const double ft = t_is_cos(term.kind) ? dcos(i, ct, st) : dsin(i, ct, st);
    const double fu = u_is_cos(term.kind) ? dcos(j, cu, su) : dsin(j, cu, su);
    acc += term.coeff * std::pow(static_cast<double>(term.m), i) *
           std::pow(static_cast<double>(term.n), j) * ft * fu;
  }
  return acc;
}

double eval(const TrigSeries2D& s, double t, double u) { return eval_partial(s, 0, 0, t, u); }

SurfaceJet surface_jet(const TrigSeries2D& s, double t, double u) {
  SurfaceJet j{0, 0, 0, 0, 0, 0};
  for (const Term2D& term : s.terms()) {
    const double m = term.m, n = term.n;
    const double ct = std::cos(m * t), st = std::sin(m * t);
    const double cu = std::cos(n * u), su = std::sin(n * u);
    const bool tc = t_is_cos(term.kind);
    const bool uc = u_is_cos(term.kind);
    double ft[3], fu[3];
    for (unsigned k = 0; k < 3; ++k) {
      ft[k] = tc ? dcos(k, ct, st) : dsin(k, ct, st);
      fu[k] = uc ? dcos(k, cu, su) : dsin(k, cu, su);
    }
    const double c = term.coeff;
    j.p += c * ft[0] * fu[0];
    j.p10 += c * m * ft[1] * fu[0];
    j.p01 += c * n * ft[0] * fu[1];
    j.p20 += c * m * m * ft[2] * fu[0];
    j.p11 += c * m * n * ft[1] * fu[1];
    j.p02 += c * n * n * ft[0] * fu[2];
  }
  return j;
}

bool is_constant_width_form(const TrigSeries2D& s, double tol) {
  if (!(tol > 0)) fail(ErrorKind::invalid_argument, "tolerance must be positive");
  for (const Term2D& t : s.terms()) {
    if (std::abs(t.coeff) <= tol) continue;
    const bool even = (t.m + t.n) % 2 == 0;
    if (u_is_cos(t.kind) && even && !(t.m == 0 && t.n == 0)) return false;
    if (!u_is_cos(t.kind) && !even) return false;
  }
  return true;
}

SupportSurface::SupportSurface(TrigSeries2D series) : series_(std::move(series)) {
  const double c00 = series_.coeff(TermKind::cc, 0, 0);
  if (!(c00 > 0)) fail(ErrorKind::invalid_argument, "surface needs a positive constant term cc_00");
  width_ = 2.0 * c00;
}

double width_at(const SupportSurface& s, double t, double u) {
  return eval(s.series(), t, u) + eval(s.series(), t + kPi, kPi - u);
}

Vec3 point_at(const SupportSurface& s, double t, double u) {
  if (!(u >= 0.0 && u <= kPi)) fail(ErrorKind::invalid_argument, "need 0 <= u <= pi");
  const SurfaceJet j = s.jet(t, u);
  const double ct = std::cos(t), st = std::sin(t);
  if (u == 0.0 || u == kPi) {
    if (std::abs(j.p10) > 1e-9) {
      fail(ErrorKind::pole_irregular, "p_t does not vanish at a pole", j.p10);
    }
    // p_t / sin u tends to +-p_tu at the poles.
    const double sg = u == 0.0 ? 1.0 : -1.0;
    return {sg * (j.p01 * ct - j.p11 * st), sg * (j.p01 * st + j.p11 * ct), sg * j.p};
  }
  const double cu = std::cos(u), su = std::sin(u);
  const double radial = j.p01 * cu + j.p * su;
  const double tang = j.p10 / su;
  return {radial * ct - tang * st, radial * st + tang * ct, j.p * cu - j.p01 * su};
}

PrincipalRadii principal_radii(const SupportSurface& s, double t, double u) {
  check_u(u);
  const SurfaceJet j = s.jet(t, u);
  const double su = std::sin(u), cu = std::cos(u);
  const double s2 = su * su;
  const double csc2 = 1.0 / s2;
  const double A = 0.5 * (j.p02 + (cu / su) * j.p01 + csc2 * j.p20 + 2.0 * j.p);
  const double s2u = std::sin(2.0 * u);
  const double q = cu * j.p10 - su * j.p11;
  double B = (csc2 * csc2 / 16.0) *
             (s2u * s2u * j.p01 * j.p01 + 8.0 * su * cu * j.p01 * (j.p20 - s2 * j.p02) +
              4.0 * (j.p20 * j.p20 + s2 * s2 * j.p02 * j.p02 - 2.0 * s2 * j.p02 * j.p20 + 4.0 * q * q));
  if (B < -kMisuseThreshold) fail(ErrorKind::formula_misuse, "negative discriminant in principal radii", B);
  if (B < 0.0) B = 0.0;
  const double r = std::sqrt(B);
  return {A + r, A - r, A, B};
}

double interior_u(std::size_t j, std::size_t nu) {
  return kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(nu);
}

OppositeSumReport check_opposite_sum(const SupportSurface& s, SurfaceGrid grid, double tol) {
  check_grid(grid);
  OppositeSumReport r{0, 0, 0, false};
  const double w = s.width();
  for (std::size_t j = 0; j < grid.nu; ++j) {
    const double u = interior_u(j, grid.nu);
    for (std::size_t i = 0; i < grid.nt; ++i) {
      const double t = grid_t(i, grid.nt);
      const PrincipalRadii P = principal_radii(s, t, u);
      const PrincipalRadii Q = principal_radii(s, t + kPi, kPi - u);
      r.max_violation = std::max(r.max_violation, std::abs(P.rho0 + Q.rho1 - w));
      r.mean_violation = std::max(r.mean_violation, std::abs(P.A + Q.A - w));
      r.b_symmetry = std::max(r.b_symmetry, std::abs(P.B - Q.B));
    }
  }
  r.pass = r.max_violation <= tol && r.mean_violation <= tol && r.b_symmetry <= tol;
  return r;
}

double derivative_parity_violation(const SupportSurface& s, double t, double u) {
  const SurfaceJet a = s.jet(t, u);
  const SurfaceJet b = s.jet(t + kPi, kPi - u);
  return std::max({std::abs(a.p10 + b.p10), std::abs(a.p01 - b.p01), std::abs(a.p20 + b.p20),
                   std::abs(a.p11 - b.p11), std::abs(a.p02 + b.p02)});
}

WidthReport check_width(const SupportSurface& s, SurfaceGrid grid, double tol) {
  check_grid(grid);
  double dev = 0.0;
  for (std::size_t j = 0; j < grid.nu; ++j) {
    const double u = kPi * static_cast<double>(j) / static_cast<double>(grid.nu - 1);
    for (std::size_t i = 0; i < grid.nt; ++i) {
      dev = std::max(dev, std::abs(width_at(s, grid_t(i, grid.nt), u) - s.width()));
    }
  }
  return {dev, dev <= tol};
}

RadiiRange radii_range(const SupportSurface& s, SurfaceGrid grid) {
  check_grid(grid);
  RadiiRange r{INFINITY, -INFINITY, INFINITY, -INFINITY};
  for (std::size_t j = 0; j < grid.nu; ++j) {
    const double u = interior_u(j, grid.nu);
    for (std::size_t i = 0; i < grid.nt; ++i) {
      const PrincipalRadii pr = principal_radii(s, grid_t(i, grid.nt), u);
      r.rho0_min = std::min(r.rho0_min, pr.rho0);
      r.rho0_max = std::max(r.rho0_max, pr.rho0);
      r.rho1_min = std::min(r.rho1_min, pr.rho1);
      r.rho1_max = std::max(r.rho1_max, pr.rho1);
    }
  }
  return r;
}

bool is_convex(const SupportSurface& s, SurfaceGrid grid, double tol) {
  try {
    const RadiiRange r = radii_range(s, grid);
    return std::isfinite(r.rho0_max) && std::isfinite(r.rho1_min) && r.rho1_min >= -tol;
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::formula_misuse) return false;
    throw;
  }
}

PoleReport pole_check(const SupportSurface& s, std::size_t nt) {
  if (nt < 4) fail(ErrorKind::invalid_argument, "pole_check needs nt >= 4");
  constexpr double probes[] = {1e-1, 1e-2, 1e-3};
  double ring_max[3] = {0, 0, 0};
  for (int k = 0; k < 3; ++k) {
    const double d = probes[k];
    const double s2 = std::sin(d) * std::sin(d);
    for (std::size_t i = 0; i < nt; ++i) {
      const double t = grid_t(i, nt);
      for (double u : {d, kPi - d}) {
        ring_max[k] = std::max(ring_max[k], std::abs(eval_partial(s.series(), 1, 0, t, u)) / s2);
      }
    }
  }
  PoleReport r{};
  r.bound = *std::max_element(ring_max, ring_max + 3);
  // Bounded quotients barely change from 1e-1 to 1e-3; an O(sin u) p_t
  // grows by about 100.
  r.growth = ring_max[0] > 0 ? ring_max[2] / ring_max[0] : (ring_max[2] > 0 ? INFINITY : 1.0);
  r.bounded = std::isfinite(r.bound) && r.growth < 10.0;
  return r;
}

double surface_area(const SupportSurface& s, SurfaceGrid grid) {
  check_grid(grid);
  const GaussRule& rule = gauss_legendre(grid.nu);
  std::vector<double> rows;
  rows.reserve(grid.nu);
  for (std::size_t k = 0; k < grid.nu; ++k) {
    const double u = 0.5 * kPi * (1.0 + rule.nodes[k]);
    const double su = std::sin(u), cu = std::cos(u);
    double row = 0.0;
    for (std::size_t i = 0; i < grid.nt; ++i) {
      const SurfaceJet j = s.jet(grid_t(i, grid.nt), u);
      const double alpha = j.p + j.p02;
      const double beta = (j.p11 * su - j.p10 * cu) / (su * su);
      const double gamma = j.p11 - j.p10 * cu / su;
      const double delta = j.p * su + j.p01 * cu + j.p20 / su;
      row += std::abs(alpha * delta - beta * gamma);
    }
    rows.push_back(rule.weights[k] * row);
  }
  return compensated_sum(rows) * 0.5 * kPi * 2.0 * kPi / static_cast<double>(grid.nt);
}

double volume(const SupportSurface& s, SurfaceGrid grid, double h) {
  check_grid(grid);
  if (!(h > 0)) fail(ErrorKind::invalid_argument, "difference step must be positive");
  struct Sph {
    double r, phi, theta;
  };
  auto sph = [&s](double t, double u) {
    const Vec3 p = point_at(s, t, u);
    const double rxy = std::hypot(p.x, p.y);
    return Sph{std::hypot(rxy, p.z), std::atan2(rxy, p.z), std::atan2(p.y, p.x)};
  };
  const GaussRule& rule = gauss_legendre(grid.nu);
  std::vector<double> rows;
  rows.reserve(grid.nu);
  for (std::size_t k = 0; k < grid.nu; ++k) {
    const double u = 0.5 * kPi * (1.0 + rule.nodes[k]);
    double row = 0.0;
    for (std::size_t i = 0; i < grid.nt; ++i) {
      const double t = grid_t(i, grid.nt);
      const Sph c = sph(t, u);
      const Sph tp = sph(t + h, u), tm = sph(t - h, u);
      const Sph up = sph(t, u + h), um = sph(t, u - h);
      const double phi_t = (tp.phi - tm.phi) / (2.0 * h);
      const double phi_u = (up.phi - um.phi) / (2.0 * h);
      // theta is lifted locally: differences are taken on a continuous branch.
      const double th_t = wrap_pi(tp.theta - tm.theta) / (2.0 * h);
      const double th_u = wrap_pi(up.theta - um.theta) / (2.0 * h);
      row += c.r * c.r * c.r * (phi_u * th_t - phi_t * th_u) * std::sin(c.phi);
    }
    rows.push_back(rule.weights[k] * row);
  }
  return compensated_sum(rows) * 0.5 * kPi * 2.0 * kPi / static_cast<double>(grid.nt) / 3.0;
}

BlaschkeReport blaschke_check(const SupportSurface& s, SurfaceGrid grid) {
  BlaschkeReport r{};
  const double w = s.width();
  r.area = surface_area(s, grid);
  r.volume = volume(s, grid);
  r.predicted_volume = 0.5 * w * r.area - kPi / 3.0 * w * w * w;
  r.residual = std::abs(r.volume - r.predicted_volume) / r.volume;
  return r;
}

MeissnerConstants meissner_reference() {
  const double ac = std::acos(1.0 / 3.0);
  const double r3 = std::sqrt(3.0);
  return {(2.0 - 0.5 * r3 * ac) * kPi, (2.0 / 3.0 - 0.25 * r3 * ac) * kPi};
}

SurfaceMetrics metrics(const SupportSurface& s, SurfaceGrid quad, SurfaceGrid scan) {
  SurfaceMetrics m{};
  m.width = s.width();
  m.radii = radii_range(s, scan);
  m.convex = m.radii.rho1_min >= -1e-9;
  const BlaschkeReport b = blaschke_check(s, quad);
  m.area = b.area;
  m.volume = b.volume;
  m.blaschke_residual = b.residual;
  return m;
}

TriangleMesh export_mesh(const SupportSurface& s, SurfaceGrid grid) {
  if (grid.nt < 3 || grid.nu < 2) fail(ErrorKind::invalid_argument, "mesh grid too small");
  const std::size_t nt = grid.nt, nu = grid.nu;
  TriangleMesh mesh;
  auto add = [&](double t, double u) {
    mesh.vertices.push_back(point_at(s, t, u));
    mesh.params.push_back({t, u});
  };
  add(0.0, 0.0);
  for (std::size_t j = 1; j < nu; ++j) {
    const double u = kPi * static_cast<double>(j) / static_cast<double>(nu);
    for (std::size_t i = 0; i < nt; ++i) add(grid_t(i, nt), u);
  }
  add(0.0, kPi);
  const std::size_t north = 0;
  const std::size_t south = mesh.vertices.size() - 1;
  auto ring = [nt](std::size_t j, std::size_t i) { return 1 + (j - 1) * nt + i % nt; };
  for (std::size_t i = 0; i < nt; ++i) mesh.faces.push_back({north, ring(1, i), ring(1, i + 1)});
  for (std::size_t j = 1; j + 1 < nu; ++j) {
    for (std::size_t i = 0; i < nt; ++i) {
      const std::size_t a = ring(j, i), b = ring(j + 1, i), c = ring(j + 1, i + 1), d = ring(j, i + 1);
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, d});
    }
  }
  for (std::size_t i = 0; i < nt; ++i) mesh.faces.push_back({ring(nu - 1, i), south, ring(nu - 1, i + 1)});
  return mesh;
}

double mesh_volume(const TriangleMesh& mesh) {
  std::vector<double> parts;
  parts.reserve(mesh.faces.size());
  for (const auto& f : mesh.faces) {
    const Vec3& a = mesh.vertices[f[0]];
    const Vec3& b = mesh.vertices[f[1]];
    const Vec3& c = mesh.vertices[f[2]];
    parts.push_back((a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
                     a.z * (b.x * c.y - b.y * c.x)) /
                    6.0);
  }
  return compensated_sum(parts);
}

std::size_t mesh_non_manifold_edges(const TriangleMesh& mesh) {
  // Directed edge counts: a closed, consistently oriented surface uses each
  // directed edge once and its reverse once.
  std::map<std::pair<std::size_t, std::size_t>, int> directed;
  for (const auto& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) directed[{f[k], f[(k + 1) % 3]}]++;
  }
  std::size_t bad = 0;
  for (const auto& [e, n] : directed) {
    const auto rev = directed.find({e.second, e.first});
    if (n != 1 || rev == directed.end() || rev->second != 1) ++bad;
  }
  return bad;
}

std::vector<double> mesh_vertex_radii(const SupportSurface& s, const TriangleMesh& mesh,
                                      SurfaceGrid grid, int which) {
  if (which != 0 && which != 1) fail(ErrorKind::invalid_argument, "radius selector must be 0 or 1");
  std::vector<double> out(mesh.vertices.size(), 0.0);
  const std::size_t last = out.size() - 1;
  for (std::size_t v = 1; v < last; ++v) {
    const PrincipalRadii r = principal_radii(s, mesh.params[v][0], mesh.params[v][1]);
    out[v] = which == 0 ? r.rho0 : r.rho1;
  }
  const std::size_t nt = grid.nt;
  double north = 0.0, south = 0.0;
  for (std::size_t i = 0; i < nt; ++i) {
    north += out[1 + i];
    south += out[last - nt + i];
  }
  out[0] = north / static_cast<double>(nt);
  out[last] = south / static_cast<double>(nt);
  return out;
}

namespace {

struct SurfaceEntry {
  std::string name;
  std::string note;
  std::vector<Term2D> terms;
};

const std::vector<SurfaceEntry>& surface_entries() {
  using K = TermKind;
  static const std::vector<SurfaceEntry> entries = {
      {"sphere", "p = 1", {{0, 0, K::cc, 1.0}}},
      {"revolution3", "p = 1 + cos(3u)/8; meridian is the plane curve 1 + cos(3s)/8 up to rotation",
       {{0, 0, K::cc, 1.0}, {0, 3, K::cc, 1.0 / 8.0}}},
      // 1 + (cos 3u/8 + cos 3t sin^2 u/8)/2 with sin^2 u = (1 - cos 2u)/2.
      {"S1", "p = 1 + (cos(3u)/8 + cos(3t) sin^2(u)/8)/2",
       {{0, 0, K::cc, 1.0}, {0, 3, K::cc, 1.0 / 16.0}, {3, 0, K::cc, 1.0 / 32.0},
        {3, 2, K::cc, -1.0 / 32.0}}},
      {"S10", "p = 1 + cos(t) sin^2(u)/2",
       {{0, 0, K::cc, 1.0}, {1, 0, K::cc, 1.0 / 4.0}, {1, 2, K::cc, -1.0 / 4.0}}},
      {"S53", "p = 1 + (cos(3u)/8 + cos(5t) sin^2(u)/24)/2",
       {{0, 0, K::cc, 1.0}, {0, 3, K::cc, 1.0 / 16.0}, {5, 0, K::cc, 1.0 / 96.0},
        {5, 2, K::cc, -1.0 / 96.0}}},
      // sin 3u sin^2 u = sin 3u/2 - (sin u + sin 5u)/4.
      {"S33", "p = 1 + cos(3t) sin(3u) sin^2(u)/10",
       {{0, 0, K::cc, 1.0}, {3, 1, K::cs, -1.0 / 40.0}, {3, 3, K::cs, 1.0 / 20.0},
        {3, 5, K::cs, -1.0 / 40.0}}},
  };
  return entries;
}

const SurfaceEntry& find_entry(const std::string& name) {
  for (const auto& e : surface_entries()) {
    if (e.name == name) return e;
  }
  fail(ErrorKind::invalid_argument, "unknown catalog surface '" + name + "'");
}

}  // namespace

const std::vector<std::string>& surface_catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : surface_entries()) v.push_back(e.name);
    return v;
  }();
  return names;
}

std::string surface_catalog_note(const std::string& name) { return find_entry(name).note; }

SupportSurface catalog_surface(const std::string& name) {
  return SupportSurface(TrigSeries2D(find_entry(name).terms));
}

TrigSeries2D s33_printed_expansion() {
  // sin(3t + ku) - sin(3t - ku) = 2 cos 3t sin ku, read with the "+5" as "+5u".
  using K = TermKind;
  return TrigSeries2D({{0, 0, K::cc, 1.0},
                       {3, 1, K::cs, 2.0 / 80.0},
                       {3, 3, K::cs, 4.0 / 80.0},
                       {3, 5, K::cs, 2.0 / 80.0}});
}

}  // namespace orbiform
