#pragma once

#include <vector>

#include "betlogic/formula.hpp"
#include "betlogic/rational.hpp"

namespace betlogic {

/// Rational threshold strictly between 0 and 1.
class Threshold {
 public:
  /// Throws BadThreshold outside (0, 1).
  explicit Threshold(Rational value);
  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT

 private:
  Rational value_;
};

/// Kφ becomes P(φ) = 1 and Bφ becomes P(φ) > c; Boolean structure is kept.
FormulaL translate(const FormulaKB& f, const Threshold& c);

enum class SegerbergMode { I, E };

inline constexpr int kDefaultExpansionGuard = 4;

/// K(F0 ∨ ... ∨ Fm). Throws ExpansionTooLarge when m exceeds `guard`,
/// InvalidModel when the lists are empty or of different lengths.
FormulaKB segerberg_expand(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis,
                           SegerbergMode mode, int guard = kDefaultExpansionGuard);

/// [(φi I ψi) ∧ Bφ1 ∧ B̌φ2 ∧ ... ∧ B̌φm] → Bψ1 ∨ ... ∨ Bψm.
FormulaKB scott_instance(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis,
                         int guard = kDefaultExpansionGuard);

/// [(φi I ψi) ∧ Bφ1 ∧ ... ∧ Bφm] → Bψ1 ∨ ... ∨ Bψm.
FormulaKB ws_instance(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis,
                      int guard = kDefaultExpansionGuard);

/// Ǩφ0 ∧ B̌φ1 ∧ ... ∧ B̌φs ∧ (pairwise K(φi → ¬φj), i ≠ j) → B(φ0 ∨ ... ∨ φs).
/// `phis` holds φ0..φs.
FormulaKB sc0_instance(const std::vector<FormulaKB>& phis);
/// B̌φ1 ∧ ... ∧ B̌φs ∧ (pairwise K(φi → ¬φj)) → B(φ1 ∨ ... ∨ φs).
FormulaKB sc1_instance(const std::vector<FormulaKB>& phis);

FormulaKB d_instance(const FormulaKB& phi);                          // Bφ → B̌φ
FormulaKB sc_instance(const FormulaKB& phi, const FormulaKB& psi);   // B̌φ ∧ Ǩ(¬φ∧ψ) → B(φ∨ψ)
FormulaKB kbm_instance(const FormulaKB& phi, const FormulaKB& psi);  // K(φ→ψ) → (Bφ → Bψ)

/// s' = c/(1-c) and s = ceiling(s').
struct ScottRatio {
  Rational s_prime;
  int s;
  bool exact() const { return s_prime == Rational(s); }
};
ScottRatio scott_ratio(const Threshold& c);

}  // namespace betlogic
