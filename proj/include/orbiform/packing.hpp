#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orbiform {

struct Vec2 {
  double x;
  double y;
};

// Placement of a Reuleaux triangle whose body frame has its centroid at the
// origin and vertex 0 on the positive x-axis.
struct Pose {
  Vec2 translation;
  double rotation = 0.0;  // normalised to [0, 2 pi)
  bool mirrored = false;  // reflect y in the body frame before rotating
};

Pose make_pose(Vec2 translation, double rotation, bool mirrored = false);

struct Rect {
  double x0, y0, x1, y1;
  double area() const { return (x1 - x0) * (y1 - y0); }
};

struct PackingLayout {
  std::array<Vec2, 2> lattice_basis;
  Rect fundamental_domain;
  // One pose per lattice orbit; the packing is every lattice translate.
  std::vector<Pose> generators;
  double body_width = 2.0;

  // Translates of the generators whose body meets the fundamental domain.
  std::vector<Pose> poses() const;
  // Translates that can reach the given window (bounding-disk test).
  std::vector<Pose> translates_near(const Rect& window) const;
};

// sqrt15 + sqrt7 - 2 sqrt3.
double packing_spacing();
// (pi - sqrt3) w^2 / 2.
double reuleaux_triangle_area(double w);

std::array<Vec2, 3> body_vertices(const Pose& pose, double w);
bool point_in_reuleaux_triangle(const Pose& pose, Vec2 pt, double w);

// The lattice packing; throws if the sampled self-check finds an overlap.
PackingLayout build_layout();
// Same bodies on a lattice with horizontal period s; no self-check.
PackingLayout layout_with_spacing(double s);

double density_analytic();
// generators * body area / domain area.
double layout_density(const PackingLayout& layout);
std::map<std::string, double> reference_densities();

struct PackingReport {
  double analytic_density;
  double mc_density;
  double mc_stderr;
  std::uint64_t samples;
  std::uint64_t seed;
};

// Uniform samples over the fundamental domain, generated in fixed blocks
// whose streams depend only on (seed, block index).
PackingReport density_monte_carlo(const PackingLayout& layout, std::uint64_t samples,
                                  std::uint64_t seed);
// True iff no sample lies strictly inside two distinct bodies.
bool overlap_check(const PackingLayout& layout, std::uint64_t samples, std::uint64_t seed);

// Bodies of the packing containing pt (all lattice translates).
int coverage_count(const PackingLayout& layout, Vec2 pt);

struct AreaEstimate {
  double value;
  double stderr_;
};
AreaEstimate body_area_monte_carlo(double w, std::uint64_t samples, std::uint64_t seed);

}  // namespace orbiform
