#include <algorithm>

#include "betlogic/error.hpp"
#include "betlogic/properties.hpp"

namespace betlogic {

namespace {

constexpr int kMaxDeriveCell = 24;

}  // namespace

NeighborhoodModel derive_neighborhoods(const ProbabilityModel& m, const Threshold& c) {
  const Frame& f = m.frame();
  std::vector<std::vector<EventSet>> gens(f.cell_count());
  for (int ci = 0; ci < f.cell_count(); ++ci) {
    const EventSet& cell = f.cells()[ci];
    if (cell.count() > kMaxDeriveCell)
      throw Error(ErrorCode::CellTooLargeForBruteForce,
                  "cell " + f.format_set(cell) + " is too large to derive neighborhoods");
    // P_w(X) > c  iff  P(X) > c * P([w])
    const Rational bar = c.value() * m.cell_mass(ci);
    for_each_subset(cell, [&](const EventSet& x) {
      const Rational px = m.probability(x);
      if (px <= bar) return;
      bool minimal = true;
      x.for_each([&](int v) {
        if (minimal && px - m.weight(v) > bar) minimal = false;
      });
      if (minimal) gens[ci].push_back(x);
    });
  }
  return NeighborhoodModel(f, std::move(gens));
}

AgreementResult check_agreement(const NeighborhoodModel& mn, const ProbabilityModel& mp,
                                const Threshold& c) {
  const Frame& f = mn.frame();
  if (f.worlds() != mp.frame().worlds())
    throw Error(ErrorCode::FrameMismatch, "models declare different worlds");
  if (f.cells() != mp.frame().cells())
    throw Error(ErrorCode::FrameMismatch, "models have different partitions");
  if (f.atoms() != mp.frame().atoms())
    throw Error(ErrorCode::FrameMismatch, "models have different valuations");
  for (int w = 0; w < f.size(); ++w) {
    const int ci = f.cell_index(w);
    AgreementResult result;
    for_each_subset(f.cells()[ci], [&](const EventSet& x) {
      if (!result.holds) return;
      const bool in_n = mn.is_neighborhood_in_cell(ci, x);
      const Rational p = mp.conditional_probability(w, x);
      if (in_n != (p > c.value())) result = AgreementResult{false, w, x, in_n, p};
    });
    if (!result.holds) return result;
  }
  return {};
}

}  // namespace betlogic
