#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "orbiform/catalog.hpp"
#include "orbiform/kernels.hpp"
#include "orbiform/packing.hpp"
#include "orbiform/trig_series.hpp"
#include "orbiform/verify.hpp"

using namespace orbiform;
namespace k = orbiform::kernels;

namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct IsaGuard {
  ~IsaGuard() { k::force_isa(std::nullopt); }
};

}  // namespace

TEST_CASE("scalar and avx2 trig kernels are bitwise identical") {
  if (!k::isa_supported(k::Isa::avx2)) return;
  Rng rng(21);
  for (std::size_t n_pts : {1u, 3u, 4u, 7u, 64u, 1001u}) {
    for (std::size_t n_harm : {0u, 1u, 5u, 33u}) {
      std::vector<double> cc(n_harm), sc(n_harm), c1(n_pts), s1(n_pts);
      for (auto& v : cc) v = rng.uniform(-1, 1);
      for (auto& v : sc) v = rng.uniform(-1, 1);
      for (std::size_t i = 0; i < n_pts; ++i) {
        double t = rng.uniform(0, 6.3);
        c1[i] = std::cos(t);
        s1[i] = std::sin(t);
      }
      std::vector<double> a(n_pts), b(n_pts);
      k::scalar::trig_eval_dense(0.7, cc.data(), sc.data(), n_harm, c1.data(), s1.data(), a.data(), n_pts);
      k::avx2::trig_eval_dense(0.7, cc.data(), sc.data(), n_harm, c1.data(), s1.data(), b.data(), n_pts);
      CHECK(same_bits(a, b));
    }
  }
}

TEST_CASE("scalar and avx2 cover counts agree") {
  if (!k::isa_supported(k::Isa::avx2)) return;
  PackingLayout layout = build_layout();
  std::vector<k::DiskTriple> bodies;
  for (const Pose& p : layout.poses()) {
    auto v = body_vertices(p, layout.body_width);
    bodies.push_back({{v[0].x, v[1].x, v[2].x}, {v[0].y, v[1].y, v[2].y}});
  }
  Rng rng(8);
  const std::size_t n = 4099;
  std::vector<double> px(n), py(n);
  for (std::size_t i = 0; i < n; ++i) {
    px[i] = rng.uniform(-1, 4);
    py[i] = rng.uniform(-2, 2);
  }
  std::vector<std::uint16_t> a(n), b(n);
  k::scalar::cover_counts(px.data(), py.data(), n, bodies.data(), bodies.size(), 4.0, a.data());
  k::avx2::cover_counts(px.data(), py.data(), n, bodies.data(), bodies.size(), 4.0, b.data());
  CHECK(a == b);
}

TEST_CASE("results do not depend on the dispatched isa") {
  IsaGuard guard;
  TrigSeries1D s = fejer_oval(32, 5).series();
  k::force_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  std::vector<double> a = eval_grid(s, 1024);
  PackingReport ra = density_monte_carlo(build_layout(), 200000, 4);
  k::force_isa(k::Isa::avx2);
  std::vector<double> b = eval_grid(s, 1024);
  PackingReport rb = density_monte_carlo(build_layout(), 200000, 4);
  CHECK(same_bits(a, b));
  CHECK(ra.mc_density == rb.mc_density);
}

TEST_CASE("isa names") {
  CHECK(std::string(k::isa_name(k::Isa::scalar)) == "scalar");
  CHECK(std::string(k::isa_name(k::Isa::avx2)) == "avx2");
  CHECK(k::isa_supported(k::Isa::scalar));
}
