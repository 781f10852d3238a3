#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbiform {

// cc: cos(mt)cos(nu), sc: sin(mt)cos(nu), cs: cos(mt)sin(nu), ss: sin(mt)sin(nu).
enum class TermKind { cc, sc, cs, ss };

const char* to_string(TermKind kind) noexcept;
std::optional<TermKind> term_kind_from_string(const std::string& s);

struct Term2D {
  unsigned m;
  unsigned n;
  TermKind kind;
  double coeff;

  bool operator==(const Term2D&) const = default;
};

// Doubly indexed trigonometric polynomial in (t, u). Terms are kept sorted by
// (kind, m, n), merged, and without zeros.
class TrigSeries2D {
 public:
  TrigSeries2D() = default;
  explicit TrigSeries2D(std::vector<Term2D> terms);

  std::span<const Term2D> terms() const { return terms_; }
  double coeff(TermKind kind, unsigned m, unsigned n) const;
  unsigned max_m() const;
  unsigned max_n() const;

  friend TrigSeries2D operator+(const TrigSeries2D& x, const TrigSeries2D& y);
  friend TrigSeries2D operator*(double alpha, const TrigSeries2D& x);
  bool operator==(const TrigSeries2D&) const = default;

 private:
  std::vector<Term2D> terms_;
};

// Partial derivatives p^{(i,j)} = d^{i+j} p / dt^i du^j up to order two.
struct SurfaceJet {
  double p;
  double p10;
  double p01;
  double p20;
  double p11;
  double p02;
};

double eval(const TrigSeries2D& s, double t, double u);
// Term-wise partial derivative of any order.
double eval_partial(const TrigSeries2D& s, unsigned i, unsigned j, double t, double u);
SurfaceJet surface_jet(const TrigSeries2D& s, double t, double u);

// Parity test: cc/sc vanish when m+n is even (except (0,0)), cs/ss vanish
// when m+n is odd.
bool is_constant_width_form(const TrigSeries2D& s, double tol = 1e-9);

class SupportSurface {
 public:
  // Requires cc_00 > 0; the width is 2 cc_00.
  explicit SupportSurface(TrigSeries2D series);

  const TrigSeries2D& series() const { return series_; }
  double width() const { return width_; }
  SurfaceJet jet(double t, double u) const { return surface_jet(series_, t, u); }

 private:
  TrigSeries2D series_;
  double width_;
};

struct Vec3 {
  double x;
  double y;
  double z;
};

double width_at(const SupportSurface& s, double t, double u);

// Closed-form coordinates for 0 < u < pi, limits at u = 0 and u = pi.
// Throws pole_irregular if p_t does not vanish at a pole.
Vec3 point_at(const SupportSurface& s, double t, double u);

struct PrincipalRadii {
  double rho0;  // A + sqrt(B)
  double rho1;  // A - sqrt(B)
  double A;
  double B;     // after clamping tiny negatives
};

inline constexpr double kUmbilicClamp = 1e-12;
inline constexpr double kMisuseThreshold = 1e-9;

// 0 < u < pi. B in [-1e-9, 0) is treated as 0; below that formula_misuse.
PrincipalRadii principal_radii(const SupportSurface& s, double t, double u);

struct SurfaceGrid {
  std::size_t nt = 128;
  std::size_t nu = 64;
};

// Interior sample u_j = pi (j + 1/2) / nu, t_i = 2 pi i / nt; the opposite of
// a sample is again a sample.
double interior_u(std::size_t j, std::size_t nu);

// Opposite points P = (t, u) and Q = (t + pi, pi - u).
struct OppositeSumReport {
  double max_violation;   // |rho0(P) + rho1(Q) - w|
  double mean_violation;  // |rho_mean(P) + rho_mean(Q) - w|, rho_mean = A
  double b_symmetry;      // |B(P) - B(Q)|
  bool pass;
};
OppositeSumReport check_opposite_sum(const SupportSurface& s, SurfaceGrid grid = {},
                                     double tol = 1e-8);

// Largest residual of the relations between the jets at opposite points
// (p10, p20, p02 change sign; p01, p11 are equal) implied by constant width.
double derivative_parity_violation(const SupportSurface& s, double t, double u);

struct WidthReport {
  double max_deviation;  // from the nominal width 2 cc_00
  bool pass;
};
// Over t_i and u_j = pi j/(nu-1) including both poles.
WidthReport check_width(const SupportSurface& s, SurfaceGrid grid = {}, double tol = 1e-10);

struct RadiiRange {
  double rho0_min, rho0_max, rho1_min, rho1_max;
};
RadiiRange radii_range(const SupportSurface& s, SurfaceGrid grid = {});

bool is_convex(const SupportSurface& s, SurfaceGrid grid = {}, double tol = 1e-9);

struct PoleReport {
  double bound;     // max |p_t / sin^2 u| over the probe rings
  double growth;    // ratio between the innermost and outermost probe rings
  bool bounded;
};
PoleReport pole_check(const SupportSurface& s, std::size_t nt = 64);

// Trapezoid in t, Gauss-Legendre in u (nodes never hit the poles).
double surface_area(const SupportSurface& s, SurfaceGrid grid = {256, 128});
// (1/3) int r^3 (phi_u theta_t - phi_t theta_u) sin(phi); Jacobian by
// central differences with step h.
double volume(const SupportSurface& s, SurfaceGrid grid = {256, 128}, double h = 1e-5);

struct BlaschkeReport {
  double area;
  double volume;
  double predicted_volume;  // (w/2) A - (pi/3) w^3
  double residual;          // relative
};
BlaschkeReport blaschke_check(const SupportSurface& s, SurfaceGrid grid = {256, 128});

struct MeissnerConstants {
  double area_coeff;
  double volume_coeff;
};
MeissnerConstants meissner_reference();

struct SurfaceMetrics {
  double width;
  double area;
  double volume;
  RadiiRange radii;
  bool convex;
  double blaschke_residual;
};
SurfaceMetrics metrics(const SupportSurface& s, SurfaceGrid quad = {256, 128},
                       SurfaceGrid scan = {128, 64});

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 3>> faces;  // 0-based
  // (t, u) of each vertex; poles use t = 0.
  std::vector<std::array<double, 2>> params;
};

// Rings at u = pi j / nu (j = 1..nu-1) with nt vertices each, one vertex
// per pole, pole fans; outward-oriented and watertight.
TriangleMesh export_mesh(const SupportSurface& s, SurfaceGrid grid = {128, 64});
double mesh_volume(const TriangleMesh& mesh);
// Number of edges used by a count of triangles other than two.
std::size_t mesh_non_manifold_edges(const TriangleMesh& mesh);

// Per-vertex radius (0 for rho0, 1 for rho1); pole vertices take the mean
// of the adjacent ring.
std::vector<double> mesh_vertex_radii(const SupportSurface& s, const TriangleMesh& mesh,
                                      SurfaceGrid grid, int which);

// Named example surfaces, all of width 2.
const std::vector<std::string>& surface_catalog_names();
std::string surface_catalog_note(const std::string& name);
SupportSurface catalog_surface(const std::string& name);
// The printed sin(3t +- ku) expansion of the S(3,3) support function,
// converted to the basis; differs from catalog_surface("S33") in the
// signs of the u and 5u terms.
TrigSeries2D s33_printed_expansion();

}  // namespace orbiform
