#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "betlogic/formula.hpp"
#include "betlogic/probability_model.hpp"

namespace betlogic {

/// Seeded generator whose draws are identical across standard libraries:
/// the engine output is fixed by the standard and bounded draws use
/// rejection sampling instead of a library distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct RandomModelSpec {
  int min_worlds = 1;
  int max_worlds = 6;
  int max_denominator = 64;
  std::vector<std::string> atoms = {"p", "q"};
};

/// Worlds w1..wn, a uniformly chosen restricted growth string as partition,
/// a random valuation, and weights k_i / D with D <= max_denominator.
ProbabilityModel random_probability_model(Rng& rng, const RandomModelSpec& spec = {});

/// Random formula over `atoms` with modal/Boolean nesting depth <= depth.
FormulaKB random_formula_kb(Rng& rng, const std::vector<std::string>& atoms, int depth);

}  // namespace betlogic
