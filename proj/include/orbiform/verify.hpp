#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orbiform/io.hpp"
#include "orbiform/surface.hpp"
#include "orbiform/trig_series.hpp"

namespace orbiform {

// Deterministic uniform doubles; independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

// Mean 1 and harmonics 1..n_max with amplitudes small enough that the curve
// stays convex. With constant_width the even harmonics are zero; otherwise
// at least one even harmonic has magnitude >= 1e-3.
TrigSeries1D random_oval_series(Rng& rng, unsigned n_max, bool constant_width);
// cc_00 = 1 plus a few small terms obeying (or, with at least one term of
// magnitude >= 1e-3, violating) the constant-width parity rule.
TrigSeries2D random_surface_series(Rng& rng, unsigned max_index, bool constant_width);

enum class CheckStatus {
  pass,
  fail,
  // Documented, understood deviation; reported but does not fail the suite.
  known_deviation,
};

const char* to_string(CheckStatus s) noexcept;

struct Check {
  std::string name;
  CheckStatus status;
  double value;      // measured quantity (usually a residual)
  double tolerance;  // what it was compared with
  std::string note;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0.0;
  bool passed() const;
};

struct Suite {
  std::string name;  // "<module>.<invariant>"
  std::string description;
  std::function<SuiteResult()> run;
};

const std::vector<Suite>& verification_suites();
// Suites whose name starts with "<module>."; an empty module selects all.
std::vector<SuiteResult> run_suites(const std::string& module);
Json suite_report(const std::vector<SuiteResult>& results);

}  // namespace orbiform
