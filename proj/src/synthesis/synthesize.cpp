#include <stdexcept>

#include "betlogic/error.hpp"
#include "betlogic/synthesis.hpp"

namespace betlogic {

// The constraint families correspond to the vector sets of the existence
// proof for agreeing measures: strict rows are the members that must be
// mapped above c (minimal neighborhoods), the weak rows the members that
// must stay at or below c (maximal non-neighborhoods), and the positivity
// rows the singleton vectors.

std::string variable_name(const Frame& f, int world) { return "p_" + f.world_name(world); }

std::vector<LinearConstraint> agreement_system(const NeighborhoodModel& m, int cell, const Threshold& c) {
  const Frame& f = m.frame();
  const EventSet& cs = f.cells().at(cell);
  if (cs.count() > kMaxSynthesisCell)
    throw Error(ErrorCode::CellTooLargeForBruteForce,
                "cell " + f.format_set(cs) + " exceeds " + std::to_string(kMaxSynthesisCell) +
                    " worlds for synthesis");
  auto sum_over = [&](const EventSet& x) {
    std::map<std::string, Rational> coef;
    x.for_each([&](int v) { coef[variable_name(f, v)] = Rational(1); });
    return coef;
  };
  std::vector<LinearConstraint> out;
  out.push_back(LinearConstraint::eq(sum_over(cs), Rational(1)));
  cs.for_each([&](int v) { out.push_back(LinearConstraint::gt(sum_over(EventSet::singleton(f.size(), v)), Rational(0))); });
  for (const auto& g : m.generators(cell)) out.push_back(LinearConstraint::gt(sum_over(g), c.value()));
  for (const auto& y : maximal_non_neighborhoods(m, cell)) {
    if (y.is_empty()) continue;
    out.push_back(LinearConstraint::leq(sum_over(y), c.value()));
  }
  return out;
}

SynthesisResult synthesize_measure(const NeighborhoodModel& m, const Threshold& c) {
  const Frame& f = m.frame();
  std::vector<Rational> weights(f.size());
  const Rational cell_weight(1, f.cell_count());
  for (int ci = 0; ci < f.cell_count(); ++ci) {
    std::vector<std::string> vars;
    f.cells()[ci].for_each([&](int v) { vars.push_back(variable_name(f, v)); });
    const LPResult lp = lp_feasible(agreement_system(m, ci, c), vars);
    if (!lp.feasible) return SynthesisResult{false, std::nullopt, ci};
    f.cells()[ci].for_each([&](int v) { weights[v] = cell_weight * lp.assignment.at(variable_name(f, v)); });
  }
  ProbabilityModel p(f, std::move(weights));
  if (!check_agreement(m, p, c).holds)
    throw std::logic_error("synthesized measure does not agree with the neighborhood model");
  return SynthesisResult{true, std::move(p), -1};
}

}  // namespace betlogic
