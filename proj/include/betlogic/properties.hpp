#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betlogic/builders.hpp"
#include "betlogic/neighborhood_model.hpp"
#include "betlogic/probability_model.hpp"

namespace betlogic {

struct Witness {
  int cell = -1;
  std::vector<EventSet> sets;  // offending sets for the simple properties
  std::vector<EventSet> xs;    // X1..Xm for counting properties
  std::vector<EventSet> ys;    // Y1..Ym for counting properties
  std::string note;
};

struct Verdict {
  std::string property;
  bool holds = true;
  std::optional<Witness> witness;
};

struct PropertyReport {
  std::vector<Verdict> verdicts;

  bool all_hold() const;
  /// Null when the property was not checked.
  const Verdict* find(const std::string& property) const;
  bool holds(const std::string& property) const;
};

/// Bounds for the exhaustive counting-property search.
struct BruteForceBudget {
  int m_max = 3;
  int max_cell_size = 8;
  /// Upper bound on tuples examined per cell and m.
  long long max_work = 50'000'000;
};

/// (kbc), (kbf), (n), (a), (kbm) on an explicit per-world system.
PropertyReport check_base_properties(const RawNeighborhoodSystem& raw);
PropertyReport check_base_properties(const NeighborhoodModel& m);

/// (d), (sc), and (scott) for m = 1..budget.m_max.
/// Throws CellTooLargeForBruteForce.
PropertyReport check_mid_threshold(const NeighborhoodModel& m, const BruteForceBudget& budget = {});

/// The threshold-specific candidate conditions: (sc0^s) when s = s', else
/// (sc1^s); plus (ws) for m = 1..budget.m_max. These are necessary
/// conditions under test, not a characterization.
PropertyReport check_conjectured(const NeighborhoodModel& m, const Threshold& c,
                                 const BruteForceBudget& budget = {});

/// Does every world of `cell` satisfy at most as many of `xs` as of `ys`?
bool counting_dominated(const EventSet& cell, const std::vector<EventSet>& xs,
                        const std::vector<EventSet>& ys);

/// Direct check that (xs, ys) violates (scott) in `cell`: X1 ∈ N,
/// [w]-Xi ∉ N for i ≥ 2, the counting condition holds, and no Yj ∈ N.
bool is_scott_violation(const NeighborhoodModel& m, int cell, const std::vector<EventSet>& xs,
                        const std::vector<EventSet>& ys);
/// Same for (ws): every Xi ∈ N.
bool is_ws_violation(const NeighborhoodModel& m, int cell, const std::vector<EventSet>& xs,
                     const std::vector<EventSet>& ys);

/// Re-checks a Fails verdict of any property above by direct evaluation.
bool confirms_violation(const NeighborhoodModel& m, const Verdict& v);
bool confirms_violation(const RawNeighborhoodSystem& raw, const Verdict& v);

/// Maximal subsets of the cell that are not neighborhoods.
std::vector<EventSet> maximal_non_neighborhoods(const NeighborhoodModel& m, int cell);
/// Minimal X ⊆ cell with cell - X ∉ N.
std::vector<EventSet> minimal_unrefuted(const NeighborhoodModel& m, int cell);

/// N^c(w) = {X ⊆ [w] : P_w(X) > c}, stored by its minimal sets.
/// Throws CellTooLargeForBruteForce for cells above 24 worlds.
NeighborhoodModel derive_neighborhoods(const ProbabilityModel& m, const Threshold& c);

struct AgreementResult {
  bool holds = true;
  int world = -1;
  EventSet set;
  bool in_neighborhood = false;
  Rational probability;
};

/// X ∈ N(w) iff P_w(X) > c for every w and X ⊆ [w]. Throws FrameMismatch.
AgreementResult check_agreement(const NeighborhoodModel& mn, const ProbabilityModel& mp,
                                const Threshold& c);

}  // namespace betlogic
