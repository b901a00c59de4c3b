#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betlogic/builders.hpp"
#include "betlogic/formula.hpp"
#include "betlogic/neighborhood_model.hpp"
#include "betlogic/probability_model.hpp"

namespace betlogic {

// Truth sets. Unknown atoms are false everywhere.
EventSet extension_l(const ProbabilityModel& m, const FormulaL& f);
EventSet extension_kb(const ProbabilityModel& m, const FormulaKB& f, const Threshold& c);
EventSet extension_kb(const NeighborhoodModel& m, const FormulaKB& f);

/// Value of a term at a world: constants plus q * P_w(φ).
Rational term_value(const ProbabilityModel& m, int world, const Term& t);

bool eval_l(const ProbabilityModel& m, int world, const FormulaL& f);
bool eval_kb_prob(const ProbabilityModel& m, int world, const FormulaKB& f, const Threshold& c);
bool eval_kb_nbhd(const NeighborhoodModel& m, int world, const FormulaKB& f);

/// Does every world of [w] satisfy at least as many ψs as φs (mode I), or
/// exactly as many (mode E)? No expansion is built.
bool eval_segerberg_direct(const ProbabilityModel& m, int world, const std::vector<FormulaKB>& phis,
                           const std::vector<FormulaKB>& psis, SegerbergMode mode,
                           const Threshold& c);
bool eval_segerberg_direct(const NeighborhoodModel& m, int world, const std::vector<FormulaKB>& phis,
                           const std::vector<FormulaKB>& psis, SegerbergMode mode);

bool valid_in_model(const ProbabilityModel& m, const FormulaKB& f, const Threshold& c);
bool valid_in_model(const ProbabilityModel& m, const FormulaL& f);
bool valid_in_model(const NeighborhoodModel& m, const FormulaKB& f);

struct CountermodelResult {
  bool found = false;
  std::optional<NeighborhoodModel> nbhd_model;
  std::optional<ProbabilityModel> prob_model;
  int world = -1;
  std::string bound;            // describes the search space when nothing was found
  long long models_checked = 0;
};

/// Exhaustive search in canonical order: world count, partition (restricted
/// growth strings), valuation of the formula's atoms, then per-cell
/// antichains. Throws BoundTooLarge for more than 5 worlds or 3 atoms.
CountermodelResult find_nbhd_countermodel(const FormulaKB& f, int max_worlds,
                                          bool require_mid_threshold, int scott_m_max = 3);

/// Random falsification over probability models with denominators <= 64;
/// deterministic for a fixed seed.
CountermodelResult sample_prob_countermodel(const FormulaKB& f, const Threshold& c, int trials,
                                            int max_worlds, std::uint64_t seed);

}  // namespace betlogic
