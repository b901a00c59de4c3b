#include "betlogic/random.hpp"

#include <algorithm>
#include <limits>

#include "betlogic/error.hpp"

namespace betlogic {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::BoundTooLarge, "empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

ProbabilityModel random_probability_model(Rng& rng, const RandomModelSpec& spec) {
  const int n = rng.range(spec.min_worlds, spec.max_worlds);
  if (n > spec.max_denominator)
    throw Error(ErrorCode::BoundTooLarge, "more worlds than the denominator bound allows");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("w" + std::to_string(i + 1));

  std::vector<int> block(n, 0);
  int blocks = 1;
  for (int i = 1; i < n; ++i) {
    block[i] = rng.range(0, blocks);
    if (block[i] == blocks) ++blocks;
  }
  std::vector<std::uint64_t> bits(blocks, 0);
  for (int i = 0; i < n; ++i) bits[block[i]] |= std::uint64_t{1} << i;
  std::vector<EventSet> cells;
  for (auto b : bits) cells.emplace_back(n, b);

  std::map<std::string, EventSet> atoms;
  for (const auto& a : spec.atoms) atoms.emplace(a, EventSet(n, rng.below(std::uint64_t{1} << n)));

  // Composition of D into n positive parts via n-1 distinct cut points.
  const int d = rng.range(n, spec.max_denominator);
  std::vector<int> cuts;
  while (static_cast<int>(cuts.size()) < n - 1) {
    const int cut = rng.range(1, d - 1);
    if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) cuts.push_back(cut);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> weights;
  int prev = 0;
  for (int cut : cuts) {
    weights.emplace_back(cut - prev, d);
    prev = cut;
  }
  weights.emplace_back(d - prev, d);
  return ProbabilityModel(Frame(std::move(names), std::move(cells), std::move(atoms)),
                          std::move(weights));
}

FormulaKB random_formula_kb(Rng& rng, const std::vector<std::string>& atoms, int depth) {
  if (depth <= 0 || rng.below(5) == 0) {
    const auto pick = rng.below(atoms.size() + 1);
    return pick == atoms.size() ? top() : atom(atoms[pick]);
  }
  switch (rng.below(6)) {
    case 0: return neg(random_formula_kb(rng, atoms, depth - 1));
    case 1:
      return conj(random_formula_kb(rng, atoms, depth - 1), random_formula_kb(rng, atoms, depth - 1));
    case 2:
      return disj(random_formula_kb(rng, atoms, depth - 1), random_formula_kb(rng, atoms, depth - 1));
    case 3: return know(random_formula_kb(rng, atoms, depth - 1));
    case 4: return believe(random_formula_kb(rng, atoms, depth - 1));
    default: return plausible(random_formula_kb(rng, atoms, depth - 1));
  }
}

}  // namespace betlogic
