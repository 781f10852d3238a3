#include "orbiform/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "orbiform/error.hpp"
#include "orbiform/kernels.hpp"

namespace orbiform {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kBlock = 1 << 16;

double wrap_angle(double a) {
  double r = std::fmod(a, 2.0 * kPi);
  if (r < 0) r += 2.0 * kPi;
  return r;
}

double circumradius(double w) { return w / std::sqrt(3.0); }

kernels::DiskTriple disks_of(const Pose& pose, double w) {
  const auto v = body_vertices(pose, w);
  return {{v[0].x, v[1].x, v[2].x}, {v[0].y, v[1].y, v[2].y}};
}

// Uniform doubles in [0, 1) for block `block` of the stream `seed`.
class BlockStream {
 public:
  BlockStream(std::uint64_t seed, std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    rng_.seed(seq);
  }
  double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

// Visits the cover count of every sample in the domain, block by block.
template <typename Fn>
void for_each_sample_block(const PackingLayout& layout, std::uint64_t samples, std::uint64_t seed,
                           Fn&& fn) {
  const Rect& d = layout.fundamental_domain;
  std::vector<kernels::DiskTriple> bodies;
  for (const Pose& p : layout.translates_near(d)) bodies.push_back(disks_of(p, layout.body_width));
  const double r2 = layout.body_width * layout.body_width;
  std::vector<double> xs, ys;
  std::vector<std::uint16_t> counts;
  for (std::uint64_t start = 0, block = 0; start < samples; start += kBlock, ++block) {
    const std::uint64_t m = std::min(kBlock, samples - start);
    BlockStream rng(seed, block);
    xs.resize(m);
    ys.resize(m);
    counts.resize(m);
    for (std::uint64_t i = 0; i < m; ++i) {
      xs[i] = d.x0 + (d.x1 - d.x0) * rng.next();
      ys[i] = d.y0 + (d.y1 - d.y0) * rng.next();
    }
    kernels::cover_counts(xs.data(), ys.data(), m, bodies.data(), bodies.size(), r2, counts.data());
    if (!fn(counts)) return;
  }
}

bool body_meets_rect(const Pose& pose, double w, const Rect& r) {
  // Boundary samples plus the rectangle corners decide intersection of two
  // convex sets well enough for listing purposes.
  const auto v = body_vertices(pose, w);
  // Bodies that merely touch the rectangle are excluded.
  constexpr double m = 1e-9;
  auto inside_rect = [&r](Vec2 p) {
    return p.x > r.x0 + m && p.x < r.x1 - m && p.y > r.y0 + m && p.y < r.y1 - m;
  };
  for (int e = 0; e < 3; ++e) {
    const Vec2 c = v[(e + 2) % 3];
    const double a0 = std::atan2(v[e].y - c.y, v[e].x - c.x);
    for (int s = 0; s <= 120; ++s) {
      const double a = a0 + (kPi / 3.0) * s / 120.0;
      if (inside_rect({c.x + w * std::cos(a), c.y + w * std::sin(a)})) return true;
    }
  }
  const Vec2 corners[] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x0, r.y1}, {r.x1, r.y1}};
  return std::any_of(std::begin(corners), std::end(corners),
                     [&](Vec2 p) { return point_in_reuleaux_triangle(pose, p, w); });
}

}  // namespace

Pose make_pose(Vec2 translation, double rotation, bool mirrored) {
  return {translation, wrap_angle(rotation), mirrored};
}

double packing_spacing() { return std::sqrt(15.0) + std::sqrt(7.0) - 2.0 * std::sqrt(3.0); }

double reuleaux_triangle_area(double w) { return (kPi - std::sqrt(3.0)) * w * w / 2.0; }

std::array<Vec2, 3> body_vertices(const Pose& pose, double w) {
  const double R = circumradius(w);
  const double c = std::cos(pose.rotation);
  const double s = std::sin(pose.rotation);
  std::array<Vec2, 3> out{};
  for (int j = 0; j < 3; ++j) {
    const double a = 2.0 * kPi * j / 3.0;
    double bx = R * std::cos(a);
    double by = R * std::sin(a);
    if (pose.mirrored) by = -by;
    out[j] = {pose.translation.x + c * bx - s * by, pose.translation.y + s * bx + c * by};
  }
  return out;
}

bool point_in_reuleaux_triangle(const Pose& pose, Vec2 pt, double w) {
  if (!(w > 0)) fail(ErrorKind::invalid_argument, "body width must be positive");
  const auto v = body_vertices(pose, w);
  for (const Vec2& c : v) {
    const double dx = pt.x - c.x;
    const double dy = pt.y - c.y;
    if (!(dx * dx + dy * dy < w * w)) return false;
  }
  return true;
}

std::vector<Pose> PackingLayout::translates_near(const Rect& window) const {
  const double reach = circumradius(body_width);
  std::vector<Pose> out;
  const double sx = lattice_basis[0].x;
  const double sy = lattice_basis[1].y;
  for (const Pose& g : generators) {
    const int i0 = static_cast<int>(std::floor((window.x0 - reach - g.translation.x) / sx)) - 1;
    const int i1 = static_cast<int>(std::ceil((window.x1 + reach - g.translation.x) / sx)) + 1;
    const int j0 = static_cast<int>(std::floor((window.y0 - reach - g.translation.y) / sy)) - 1;
    const int j1 = static_cast<int>(std::ceil((window.y1 + reach - g.translation.y) / sy)) + 1;
    for (int i = i0; i <= i1; ++i) {
      for (int j = j0; j <= j1; ++j) {
        const Vec2 c{g.translation.x + i * sx, g.translation.y + j * sy};
        const double dx = std::max({window.x0 - c.x, 0.0, c.x - window.x1});
        const double dy = std::max({window.y0 - c.y, 0.0, c.y - window.y1});
        if (dx * dx + dy * dy < reach * reach) out.push_back({c, g.rotation, g.mirrored});
      }
    }
  }
  return out;
}

std::vector<Pose> PackingLayout::poses() const {
  std::vector<Pose> out;
  for (const Pose& p : translates_near(fundamental_domain)) {
    if (body_meets_rect(p, body_width, fundamental_domain)) out.push_back(p);
  }
  return out;
}

PackingLayout layout_with_spacing(double s) {
  const double w = 2.0;
  const double R = circumradius(w);
  const double sqrt3 = std::sqrt(3.0);
  // Body pointing right: left arc tangent to the y-axis at the origin,
  // vertex at (w, 0).
  const Pose right = make_pose({w - R, 0.0}, 0.0);
  // Body pointing left, vertex at (b, 1): its arcs touch the right-pointing
  // bodies of the same cell and of the next cell.
  const double b = 2.0 + std::sqrt(7.0) - 2.0 * sqrt3;
  const Pose left = make_pose({b + R, 1.0}, kPi);
  PackingLayout layout;
  layout.lattice_basis = {Vec2{s, 0.0}, Vec2{0.0, 2.0}};
  layout.fundamental_domain = {0.0, -1.0, s, 1.0};
  layout.generators = {right, left};
  layout.body_width = w;
  return layout;
}

PackingLayout build_layout() {
  PackingLayout layout = layout_with_spacing(packing_spacing());
  if (!overlap_check(layout, 200000, 0x5eed)) {
    fail(ErrorKind::invalid_argument, "packing layout self-check found overlapping bodies");
  }
  return layout;
}

double density_analytic() { return 2.0 * (kPi - std::sqrt(3.0)) / packing_spacing(); }

double layout_density(const PackingLayout& layout) {
  return static_cast<double>(layout.generators.size()) * reuleaux_triangle_area(layout.body_width) /
         layout.fundamental_domain.area();
}

std::map<std::string, double> reference_densities() {
  return {{"square_circle", kPi / 4.0},
          {"hex_circle", kPi / (2.0 * std::sqrt(3.0))},
          {"hex_reuleaux", kPi / (3.0 * std::sqrt(3.0)) + 1.0 / 6.0},
          {"lattice_reuleaux", density_analytic()}};
}

PackingReport density_monte_carlo(const PackingLayout& layout, std::uint64_t samples,
                                  std::uint64_t seed) {
  if (samples < 10000) fail(ErrorKind::invalid_argument, "density_monte_carlo needs >= 1e4 samples");
  std::uint64_t hits = 0;
  for_each_sample_block(layout, samples, seed, [&hits](const std::vector<std::uint16_t>& counts) {
    for (auto c : counts) hits += c > 0 ? 1 : 0;
    return true;
  });
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  return {density_analytic(), p, std::sqrt(p * (1.0 - p) / n), samples, seed};
}

bool overlap_check(const PackingLayout& layout, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 100000) fail(ErrorKind::invalid_argument, "overlap_check needs >= 1e5 samples");
  bool clean = true;
  for_each_sample_block(layout, samples, seed, [&clean](const std::vector<std::uint16_t>& counts) {
    clean = std::all_of(counts.begin(), counts.end(), [](std::uint16_t c) { return c < 2; });
    return clean;
  });
  return clean;
}

int coverage_count(const PackingLayout& layout, Vec2 pt) {
  int n = 0;
  for (const Pose& p : layout.translates_near({pt.x, pt.y, pt.x, pt.y})) {
    n += point_in_reuleaux_triangle(p, pt, layout.body_width) ? 1 : 0;
  }
  return n;
}

AreaEstimate body_area_monte_carlo(double w, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) fail(ErrorKind::invalid_argument, "need at least one sample");
  const double R = circumradius(w);
  const Pose pose = make_pose({0.0, 0.0}, 0.0);
  const double box = 4.0 * R * R;
  std::uint64_t hits = 0;
  for (std::uint64_t start = 0, block = 0; start < samples; start += kBlock, ++block) {
    BlockStream rng(seed, block);
    const std::uint64_t m = std::min(kBlock, samples - start);
    for (std::uint64_t i = 0; i < m; ++i) {
      const Vec2 p{-R + 2.0 * R * rng.next(), -R + 2.0 * R * rng.next()};
      hits += point_in_reuleaux_triangle(pose, p, w) ? 1 : 0;
    }
  }
  const double n = static_cast<double>(samples);
  const double f = static_cast<double>(hits) / n;
  return {box * f, box * std::sqrt(f * (1.0 - f) / n)};
}

}  // namespace orbiform
