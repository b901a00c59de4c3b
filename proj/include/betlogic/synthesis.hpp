#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betlogic/builders.hpp"
#include "betlogic/lp.hpp"
#include "betlogic/neighborhood_model.hpp"
#include "betlogic/probability_model.hpp"
#include "betlogic/properties.hpp"

namespace betlogic {

inline constexpr int kMaxSynthesisCell = 12;

/// Agreement constraints for one cell, over variables p_<world>:
///   sum p_v = 1, p_v > 0,
///   sum_{v in X} p_v > c for every minimal neighborhood X,
///   sum_{v in Y} p_v <= c for every maximal non-neighborhood Y.
/// Throws CellTooLargeForBruteForce above kMaxSynthesisCell worlds.
std::vector<LinearConstraint> agreement_system(const NeighborhoodModel& m, int cell, const Threshold& c);
std::string variable_name(const Frame& f, int world);

struct SynthesisResult {
  bool feasible = false;
  std::optional<ProbabilityModel> model;
  int failing_cell = -1;  // first cell whose system is infeasible
};

/// Solves each cell's agreement system. On success every cell gets weight
/// 1/#cells and the per-cell solution is scaled into it; the result is
/// re-checked with check_agreement.
SynthesisResult synthesize_measure(const NeighborhoodModel& m, const Threshold& c);

// ---------------------------------------------------------------------------
// Comparative probability

enum class Comparison { Less, LessEq, Equiv };  // ≺, ⪯, ≈

struct ComparativeStatement {
  EventSet x;
  Comparison rel;
  EventSet y;
};

struct ComparativeRelation {
  std::vector<std::string> worlds;
  std::vector<ComparativeStatement> statements;
};

/// Measure with p_w >= 0 (or > 0 when `full_support`) and sum 1 realizing
/// every statement: ≺ strictly, ⪯ weakly, ≈ as equality.
LPResult realize_comparative(const ComparativeRelation& rel, bool full_support = false);

/// X ⪯ Y for every pair of subsets of a universe of at most 5 worlds.
class ComparisonTable {
 public:
  /// Throws UniverseTooLarge above 5 worlds.
  explicit ComparisonTable(int n);
  int size() const { return n_; }
  bool leq(std::uint64_t x, std::uint64_t y) const { return table_[x * (1ULL << n_) + y] != 0; }
  void set_leq(std::uint64_t x, std::uint64_t y, bool v) { table_[x * (1ULL << n_) + y] = v ? 1 : 0; }

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

/// X ⪯ Y iff P(X) <= P(Y) for the given nonnegative weights.
ComparisonTable induced_table(const std::vector<Rational>& weights);

/// The five classical conditions: nontrivial (W ⋠ ∅), nonnegative
/// (∅ ⪯ X), total, transitive, additive (X ⪯ Y iff X∪Z ⪯ Y∪Z for Z
/// disjoint from X and Y).
PropertyReport check_definetti(const ComparisonTable& t);

/// All pairs with X ≺ Y (X ⪯ Y and not Y ⪯ X) as strict statements.
ComparativeRelation strict_part(const ComparisonTable& t, const std::vector<std::string>& worlds);

/// The four strict statements {c}≺{a,b}, {b,d}≺{a,c}, {a,e}≺{b,c},
/// {a,b,c}≺{d,e} over worlds a..e.
ComparativeRelation kps_statements();

struct KpsExtension {
  ComparisonTable table;
  std::vector<Rational> base_weights;  // the measure whose ties were broken
};

/// Searches small integer pairs (a, b) for the measure (a, b, a+b, 2a, 2b)
/// on a..e whose only ties between disjoint sets are the four KPS pairs,
/// then orients those ties as in the statements. The returned table
/// satisfies all five conditions (checked before returning).
KpsExtension kps_extension();

}  // namespace betlogic
